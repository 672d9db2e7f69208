#pragma once

#include <variant>
#include <vector>

#include "hkdual/int_matrix.hpp"
#include "hkdual/intlin.hpp"

namespace hkdual {

/// A g-dimensional complex torus seen through its lattice Z^{2g} together with
/// a nondegenerate alternating integral form (the polarization).
class PolarizedTorus {
 public:
  /// Throws std::invalid_argument unless `form` is 2g×2g, alternating, det ≠ 0.
  explicit PolarizedTorus(IntMatrix form);

  /// The standard form [[0, D], [-D, 0]] with D = diag(d_1, ..., d_g).
  static PolarizedTorus standard(const IntVector& type);
  /// g = 2 shorthand for standard({d1, d2}).
  static PolarizedTorus standard(long d1, long d2);

  std::size_t dim() const { return form_.rows() / 2; }
  const IntMatrix& form() const { return form_; }

 private:
  IntMatrix form_;
};

/// Lattice homomorphism between tori (a matrix acting on column vectors).
struct TorusHom {
  IntMatrix matrix;

  bool is_isogeny() const;
};

/// Result of the symplectic reduction: basis·ᵀ E basis is block diagonal with
/// blocks [[0, d_i], [-d_i, 0]] in the order (e1, f1, e2, f2, ...).
struct SymplecticForm {
  IntVector type;   // d_1 | d_2 | ... | d_g, all positive
  IntMatrix basis;  // unimodular; columns are the new basis vectors
  IntMatrix reduced;
};

SymplecticForm symplectic_normal_form(const IntMatrix& alternating);

/// (d_1, ..., d_g) with d_1 | ... | d_g.
IntVector polarization_type(const PolarizedTorus& torus);

/// The polarization read as the map H_1(S) → H_1(dual) = H^1(S) in the dual basis.
TorusHom polarization_isogeny(const PolarizedTorus& torus);

/// (d_1 d_2)·φ⁻¹ for a g = 2 polarization isogeny φ. Throws std::invalid_argument
/// for non-4×4 or singular input and std::domain_error if the result is not
/// integral.
TorusHom dual_polarization(const TorusHom& phi, const Integer& degree_product);

/// Kernel of the torus map, identified with Z^{2g} / F(Z^{2g}).
/// Throws std::invalid_argument when F is not an isogeny.
FinAbGroup isogeny_kernel(const TorusHom& f);

/// A point of R^n/Z^n with rational coordinates numerators/denominator.
struct TorsionPoint {
  IntVector numerators;
  Integer denominator{1};

  static TorsionPoint zero(std::size_t n);
};

struct PositiveDimensional {
  friend bool operator==(PositiveDimensional, PositiveDimensional) = default;
};

/// Either a finite count of fixed points or a positive-dimensional fixed locus.
using FixedPointCount = std::variant<Integer, PositiveDimensional>;

/// Fixed points of y ↦ M·y + x on R^n/Z^n.
FixedPointCount affine_fixed_points(const IntMatrix& m, const TorsionPoint& x);

}  // namespace hkdual
