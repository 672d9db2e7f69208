#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkdual/int_matrix.hpp"

namespace hkdual {

/// Element of the integral exterior algebra Λ*Z^{2g} on the dual basis
/// e_1^*, ..., e_{2g}^*. Index tuples are 0-based and strictly increasing;
/// zero coefficients are never stored.
class ExtClass {
 public:
  using Monomial = std::vector<int>;

  explicit ExtClass(int g = 2) : g_(g) {}

  /// ±e_{i1}^* ∧ ... ∧ e_{ik}^* for arbitrary (0-based) indices; the sign of
  /// the sorting permutation is applied, repeated indices give 0.
  static ExtClass basis(int g, std::vector<int> indices, const Integer& coefficient = 1);

  int g() const { return g_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree if every term has the same degree (0 has no degree).
  std::optional<int> degree() const;
  Integer coefficient(const Monomial& m) const;
  /// Coefficient on e_1^*∧...∧e_{2g}^*.
  Integer top_coefficient() const;

  ExtClass& operator+=(const ExtClass& other);
  ExtClass& operator*=(const Integer& k);
  friend ExtClass operator+(ExtClass a, const ExtClass& b) { return a += b; }
  friend ExtClass operator-(ExtClass a, const ExtClass& b) { return a += b * Integer(-1); }
  friend ExtClass operator*(ExtClass a, const Integer& k) { return a *= k; }
  friend ExtClass operator*(const Integer& k, ExtClass a) { return a *= k; }
  friend bool operator==(const ExtClass&, const ExtClass&) = default;

  /// 1-based rendering such as "e₁₃ + 3e₂₄".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);

  int g_;
  std::map<Monomial, Integer> terms_;
};

/// Graded-commutative exterior product with Koszul signs.
ExtClass wedge(const ExtClass& a, const ExtClass& b);

/// d1·e_1^*∧e_3^* + d2·e_2^*∧e_4^*. Throws unless 0 < d1 | d2.
ExtClass ample_class(long d1, long d2);

/// Basis of H^3 of an abelian surface Poincaré-dual to e_1^*, ..., e_4^*:
/// {e_234, -e_134, e_124, -e_123}.
std::vector<ExtClass> poincare_dual_basis();

/// Matrix of l ∪ - : H^1 → H^3 in the basis e_j^* (source) and
/// poincare_dual_basis() (target). Throws unless l is degree 2 (or 0) and g = 2.
IntMatrix cup_with_l_matrix(const ExtClass& l);

/// Matrix of the pairing H^1 × H^3 → H^4 = Z·e_1234 on the bases above.
IntMatrix poincare_pairing_matrix();

/// ∫ l∧l with the orientation of a polarization basis, e_1∧e_3∧e_2∧e_4 > 0.
/// Relative to e_1∧e_2∧e_3∧e_4 this is -top_coefficient(l∧l).
Integer self_intersection(const ExtClass& l);

}  // namespace hkdual
