#include "hkdual/torus.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace hkdual {

namespace {

// Simultaneous change of basis b_k += q·b_l, applied to the form and basis.
void congruence_add(IntMatrix& a, IntMatrix& basis, std::size_t k, std::size_t l,
                    const Integer& q) {
  if (q == 0) return;
  basis.add_col_multiple(k, l, q);
  a.add_col_multiple(k, l, q);
  a.add_row_multiple(k, l, q);
}

void congruence_swap(IntMatrix& a, IntMatrix& basis, std::size_t k, std::size_t l) {
  if (k == l) return;
  basis.swap_cols(k, l);
  a.swap_cols(k, l);
  a.swap_rows(k, l);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Entry {
  std::size_t i;
  std::size_t j;
};

std::optional<Entry> smallest_pairing(const IntMatrix& a, std::size_t from) {
  std::optional<Entry> best;
  Integer best_abs;
  for (std::size_t i = from; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Entry{i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = minor.determinant();
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

}  // namespace

PolarizedTorus::PolarizedTorus(IntMatrix form) : form_(std::move(form)) {
  if (form_.empty() || !form_.is_square() || form_.rows() % 2 != 0)
    throw std::invalid_argument("polarization form must be 2g×2g");
  if (!form_.is_antisymmetric()) throw std::invalid_argument("polarization form must be alternating");
  if (form_.determinant() == 0) throw std::invalid_argument("polarization form is degenerate");
}

PolarizedTorus PolarizedTorus::standard(const IntVector& type) {
  const std::size_t g = type.size();
  for (std::size_t i = 0; i < g; ++i)
    if (type[i] <= 0 || (i > 0 && type[i] % type[i - 1] != 0))
      throw std::invalid_argument("a polarization type is a chain d1 | d2 | ... of positive integers");
  IntMatrix e(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    e(i, g + i) = type[i];
    e(g + i, i) = -type[i];
  }
  return PolarizedTorus(std::move(e));
}

PolarizedTorus PolarizedTorus::standard(long d1, long d2) {
  return standard(make_vector({d1, d2}));
}

bool TorusHom::is_isogeny() const { return matrix.is_square() && !matrix.empty() && matrix.determinant() != 0; }

SymplecticForm symplectic_normal_form(const IntMatrix& alternating) {
  if (!alternating.is_antisymmetric() || alternating.rows() % 2 != 0)
    throw std::invalid_argument("symplectic_normal_form needs an even alternating matrix");
  const std::size_t n = alternating.rows();
  IntMatrix a = alternating;
  IntMatrix basis = IntMatrix::identity(n);
  IntVector type;

  for (std::size_t p = 0; p + 1 < n; p += 2) {
    const std::size_t r = p + 1;
    while (true) {
      auto pivot = smallest_pairing(a, p);
      if (!pivot) throw std::invalid_argument("alternating form is degenerate");
      std::size_t i = pivot->i;
      std::size_t j = pivot->j;
      congruence_swap(a, basis, p, i);
      if (j == p) j = i;
      congruence_swap(a, basis, r, j);
      if (a(p, r) < 0) congruence_swap(a, basis, p, r);
      const Integer d = a(p, r);

      bool clean = true;
      for (std::size_t k = r + 1; k < n; ++k) {
        if (a(p, k) != 0) congruence_add(a, basis, k, r, -floor_div(a(p, k), d));
        if (a(r, k) != 0) congruence_add(a, basis, k, p, floor_div(a(r, k), d));
        if (a(p, k) != 0 || a(r, k) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t k = r + 1; k < n && divides_all; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (!mpz_divisible_p(a(k, l).get_mpz_t(), d.get_mpz_t())) {
            // Pulls the offending pairing into row p; reduction then shrinks the pivot.
            congruence_add(a, basis, p, k, Integer(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    type.push_back(a(p, r));
  }
  return SymplecticForm{std::move(type), std::move(basis), std::move(a)};
}

IntVector polarization_type(const PolarizedTorus& torus) {
  return symplectic_normal_form(torus.form()).type;
}

TorusHom polarization_isogeny(const PolarizedTorus& torus) { return TorusHom{torus.form()}; }

TorusHom dual_polarization(const TorusHom& phi, const Integer& degree_product) {
  if (phi.matrix.rows() != 4 || phi.matrix.cols() != 4)
    throw std::invalid_argument("dual_polarization is defined for abelian surfaces (4×4) only");
  const Integer det = phi.matrix.determinant();
  if (det == 0) throw std::invalid_argument("dual_polarization of a non-isogeny");
  IntMatrix out = adjugate(phi.matrix) * degree_product;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (!mpz_divisible_p(out(i, j).get_mpz_t(), det.get_mpz_t()))
        throw std::domain_error("dual polarization is not integral for this degree product");
      mpz_divexact(out(i, j).get_mpz_t(), out(i, j).get_mpz_t(), det.get_mpz_t());
    }
  return TorusHom{std::move(out)};
}

FinAbGroup isogeny_kernel(const TorusHom& f) {
  if (!f.is_isogeny()) throw std::invalid_argument("isogeny_kernel of a non-isogeny");
  return cokernel(f.matrix);
}

TorsionPoint TorsionPoint::zero(std::size_t n) { return TorsionPoint{IntVector(n, Integer(0)), 1}; }

FixedPointCount affine_fixed_points(const IntMatrix& m, const TorsionPoint& x) {
  if (!m.is_square() || m.empty()) throw std::invalid_argument("affine map must be square");
  if (x.numerators.size() != m.rows())
    throw std::invalid_argument("translation length does not match the map");
  if (x.denominator < 1) throw std::invalid_argument("torsion point denominator must be positive");
  const IntMatrix shifted = m - IntMatrix::identity(m.rows());
  const Integer det = shifted.determinant();
  // (M - I) is then a surjective endomorphism of degree |det|: every translate
  // has exactly |det| preimages.
  if (det != 0) return FixedPointCount{Integer(abs(det))};

  // (M - I)·y ≡ -x mod Z^n is solvable iff the components of U·x outside the
  // rank of the Smith form are integral.
  const SmithForm snf = smith_normal_form(shifted);
  const IntVector diag = snf.diagonal();
  std::size_t rank = 0;
  while (rank < diag.size() && diag[rank] != 0) ++rank;
  const IntVector c = snf.U * x.numerators;
  for (std::size_t i = rank; i < c.size(); ++i)
    if (!mpz_divisible_p(c[i].get_mpz_t(), x.denominator.get_mpz_t())) return FixedPointCount{Integer(0)};
  return FixedPointCount{PositiveDimensional{}};
}

}  // namespace hkdual
