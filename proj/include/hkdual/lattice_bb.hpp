#pragma once

#include <span>
#include <string>
#include <vector>

#include "hkdual/int_matrix.hpp"
#include "hkdual/kernels.hpp"

namespace hkdual {

/// Second cohomology lattice with its Beauville–Bogomolov form and Fujiki
/// constant, for a hyper-Kähler manifold of dimension 2n.
class BBLattice {
 public:
  /// Throws std::invalid_argument unless gram is symmetric and nondegenerate,
  /// fujiki > 0 and half_dim >= 1.
  BBLattice(IntMatrix gram, Rational fujiki, int half_dim, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Rational& fujiki_constant() const { return fujiki_; }
  int half_dim() const { return half_dim_; }
  const std::string& name() const { return name_; }

  Integer pairing(const IntVector& x, const IntVector& y) const;
  Integer square(const IntVector& x) const { return pairing(x, x); }
  IntVector basis_vector(std::size_t i) const;

 private:
  IntMatrix gram_;
  Rational fujiki_;
  int half_dim_;
  std::string name_;
};

namespace lattices {

/// Hyperbolic plane [[0,1],[1,0]].
IntMatrix hyperbolic_plane();
/// Rank one lattice <k>.
IntMatrix rank_one(long k);
IntMatrix direct_sum(std::span<const IntMatrix> parts);

/// U^3 ⊕ <-6> with Fujiki constant 3 and n = 2: the generalized Kummer fourfold
/// lattice. Basis order e1,f1,e2,f2,e3,f3,g.
BBLattice kum2();

}  // namespace lattices

/// gcd of q(x, y) over the lattice, i.e. the gcd of the entries of gram·x.
/// Throws std::invalid_argument on the zero vector or a length mismatch.
Integer divisibility(const BBLattice& lattice, const IntVector& x);

/// Largest matching enumeration allowed (10395 matchings at n = 6).
inline constexpr int kMaxFujikiHalfDim = 6;

/// c_X · Σ_matchings Π q(x_a, x_b) over the 2n arguments; each perfect
/// matching of the argument positions is counted once.
Rational fujiki_product(const BBLattice& lattice, std::span<const IntVector> xs,
                        kernels::Exec exec = kernels::Exec::serial);

/// c_X · (2n)!/(2^n n!) · q(x)^n.
Rational fujiki_closed_form(const BBLattice& lattice, const IntVector& x);

/// Same form, Fujiki constant divided by the group order. The form is not
/// rescaled even when it becomes imprimitive on the quotient.
BBLattice quotient_bb(const BBLattice& lattice, const Integer& group_order);

/// true iff group_order == c².
bool check_order_is_c_squared(const Rational& c, const Integer& group_order);

}  // namespace hkdual
