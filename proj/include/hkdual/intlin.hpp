#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkdual/int_matrix.hpp"

namespace hkdual {

/// U·A·V = D with U, V unimodular and D diagonal with d1 | d2 | ... , all >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  IntVector diagonal() const;
};

/// Smallest-|entry| pivoting with (row, col) lexicographic tie-break, so the
/// output is a deterministic function of the input.
SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk, 1 < d1 | d2 | ... | dk.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::size_t free_rank, IntVector invariant_factors);

  static FinAbGroup trivial() { return {}; }
  /// (Z/m)^count
  static FinAbGroup cyclic_power(const Integer& m, std::size_t count);
  /// Canonicalizes an arbitrary direct sum of cyclic groups Z/c_i (c_i = 0 means Z).
  static FinAbGroup from_cyclic_orders(const IntVector& orders);

  std::size_t free_rank() const { return free_rank_; }
  const IntVector& invariant_factors() const { return factors_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  /// Nullopt for infinite groups.
  std::optional<Integer> order() const;
  FinAbGroup direct_sum(const FinAbGroup& other) const;

  /// "0", "Z/3 ⊕ Z/3", "Z^2 ⊕ Z/6"
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  IntVector factors_;
};

/// Z^rows / image(A).
FinAbGroup cokernel(const IntMatrix& a);

/// {v ∈ (Z/m)^cols : A·v ≡ 0 mod m}. Computed from the Smith diagonal:
/// the kernel of diag(d_i) on (Z/m) is ⊕ Z/gcd(d_i, m).
FinAbGroup kernel_mod(const IntMatrix& a, const Integer& m);

/// #{v ∈ (Z/m)^cols : A·v ≡ b mod m}; 0 when the system is inconsistent.
Integer solve_affine_mod(const IntMatrix& a, const IntVector& b, const Integer& m);

}  // namespace hkdual
