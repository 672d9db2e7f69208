#include <random>

#include "doctest.h"
#include "hkdual/torus.hpp"
#include "oracles.hpp"

using namespace hkdual;

namespace {

IntMatrix random_alternating(std::size_t n, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      e(i, j) = d(rng);
      e(j, i) = -e(i, j);
    }
  return e;
}

oracle::Vec factors_of(const FinAbGroup& g) {
  oracle::Vec out;
  for (const auto& f : g.invariant_factors()) out.push_back(f.get_si());
  return out;
}

}  // namespace

TEST_CASE("polarization type of standard forms") {
  CHECK(polarization_type(PolarizedTorus::standard(1, 1)) == make_vector({1, 1}));
  CHECK(polarization_type(PolarizedTorus(IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 3}, {-1, 0, 0, 0}, {0, -3, 0, 0}})) ==
        make_vector({1, 3}));
  for (long d1 = 1; d1 <= 4; ++d1)
    for (long d2 = d1; d2 <= 12; d2 += d1)
      CHECK(polarization_type(PolarizedTorus::standard(d1, d2)) == make_vector({d1, d2}));
  CHECK(polarization_type(PolarizedTorus::standard(make_vector({1, 2, 6}))) == make_vector({1, 2, 6}));
}

TEST_CASE("invalid polarizations are rejected") {
  CHECK_THROWS_AS(PolarizedTorus(IntMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PolarizedTorus(IntMatrix(4, 4)), std::invalid_argument);
  CHECK_THROWS_AS(PolarizedTorus(IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolarizedTorus::standard(2, 3), std::invalid_argument);
}

TEST_CASE("random alternating forms: type pairs up the elementary divisors") {
  std::mt19937_64 rng(5150);
  int tested = 0;
  while (tested < 100) {
    const auto e = random_alternating(4, 6, rng);
    if (e.determinant() == 0) continue;
    ++tested;
    const auto type = polarization_type(PolarizedTorus(e));
    const auto minors = oracle::divisors_by_minors(e);
    CHECK(minors == IntVector{type[0], type[0], type[1], type[1]});
    const auto nf = symplectic_normal_form(e);
    CHECK(nf.basis.transpose() * e * nf.basis == nf.reduced);
    CHECK(abs(nf.basis.determinant()) == 1);
  }
}

TEST_CASE("polarization type is invariant under unimodular change of basis") {
  std::mt19937_64 rng(8086);
  for (int t = 0; t < 100; ++t) {
    IntMatrix e;
    do {
      e = random_alternating(t % 3 == 0 ? 6 : 4, 5, rng);
    } while (e.determinant() == 0);
    const auto b = oracle::random_unimodular(e.rows(), 12, rng);
    REQUIRE(abs(b.determinant()) == 1);
    CHECK(polarization_type(PolarizedTorus(b.transpose() * e * b)) == polarization_type(PolarizedTorus(e)));
  }
}

TEST_CASE("polarization isogeny and its dual") {
  const auto phi = polarization_isogeny(PolarizedTorus::standard(1, 3));
  CHECK(phi.matrix == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 3}, {-1, 0, 0, 0}, {0, -3, 0, 0}});
  const auto dual = dual_polarization(phi, Integer(3));
  CHECK(dual.matrix == IntMatrix{{0, 0, -3, 0}, {0, 0, 0, -1}, {3, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(factors_of(isogeny_kernel(dual)) == oracle::Vec{3, 3});

  const auto principal = polarization_isogeny(PolarizedTorus::standard(1, 1));
  CHECK(principal.matrix == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  const auto inv = dual_polarization(principal, Integer(1));
  CHECK(inv.matrix * principal.matrix == IntMatrix::identity(4));

  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = d1; d1 * d2 <= 12; d2 += d1) {
      const auto p = polarization_isogeny(PolarizedTorus::standard(d1, d2));
      const auto q = dual_polarization(p, Integer(d1 * d2));
      CHECK(q.matrix * p.matrix == IntMatrix::scalar(4, Integer(d1 * d2)));
      CHECK(p.matrix * q.matrix == IntMatrix::scalar(4, Integer(d1 * d2)));
      CHECK(isogeny_kernel(p).order() == Integer(d1 * d2 * d1 * d2));
      CHECK(isogeny_kernel(q) == FinAbGroup::from_cyclic_orders(make_vector({d1, d1, d2, d2})));
    }
  CHECK_THROWS_AS(dual_polarization(phi, Integer(2)), std::domain_error);
  CHECK_THROWS_AS(dual_polarization(TorusHom{IntMatrix(4, 4)}, Integer(1)), std::invalid_argument);
}

TEST_CASE("isogeny kernels") {
  for (long m = 1; m <= 6; ++m) {
    const auto k = isogeny_kernel(TorusHom{IntMatrix::scalar(4, Integer(m))});
    CHECK(k == FinAbGroup::cyclic_power(Integer(m), m == 1 ? 0 : 4));
  }
  CHECK_THROWS_AS(isogeny_kernel(TorusHom{IntMatrix(2, 2)}), std::invalid_argument);

  // ker F on R^n/Z^n = {y ∈ (1/det)Z^n : F y ∈ Z^n}, enumerated on the grid.
  std::mt19937_64 rng(4004);
  int tested = 0;
  while (tested < 60) {
    const std::size_t n = tested % 2 ? 2 : 4;
    const auto f = oracle::random_matrix(n, n, -3, 3, rng);
    const Integer det = abs(f.determinant());
    if (det == 0 || det > (n == 2 ? 100 : 12)) continue;
    ++tested;
    const auto k = isogeny_kernel(TorusHom{f});
    CHECK(k.order() == det);
    if (det > 1) CHECK(factors_of(k) == oracle::kernel_mod_factors(f, det.get_si()));
  }
}

TEST_CASE("affine fixed points") {
  const auto minus = IntMatrix::scalar(4, Integer(-1));
  CHECK(std::get<Integer>(affine_fixed_points(minus, TorsionPoint::zero(4))) == 16);
  for (int mask = 0; mask < 16; ++mask) {
    TorsionPoint x{IntVector(4, Integer(0)), Integer(2)};
    for (int i = 0; i < 4; ++i) x.numerators[i] = (mask >> i) & 1;
    CHECK(std::get<Integer>(affine_fixed_points(minus, x)) == 16);
  }
  TorsionPoint shift{make_vector({1, 0, 0, 0}), Integer(3)};
  CHECK(std::get<Integer>(affine_fixed_points(IntMatrix::identity(4), shift)) == 0);
  CHECK(std::holds_alternative<PositiveDimensional>(
      affine_fixed_points(IntMatrix::identity(4), TorsionPoint::zero(4))));
  // diag(1, -1): fixed circle(s) when the first coordinate is not shifted
  CHECK(std::holds_alternative<PositiveDimensional>(
      affine_fixed_points(IntMatrix{{1, 0}, {0, -1}}, TorsionPoint::zero(2))));
  CHECK(std::get<Integer>(affine_fixed_points(IntMatrix{{1, 0}, {0, -1}},
                                              TorsionPoint{make_vector({1, 0}), Integer(2)})) == 0);
}

TEST_CASE("affine fixed points agree with grid enumeration") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> num(0, 5);
  int small = 0, large = 0;
  for (int t = 0; t < 4000 && (small < 80 || large < 2); ++t) {
    const std::size_t n = t % 3 == 0 ? 4 : 2;
    const auto m = oracle::random_matrix(n, n, n == 2 ? -120 : -2, n == 2 ? 120 : 2, rng);
    IntMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= 1;
    const long det = Integer(abs(a.determinant())).get_si();
    if (det == 0) continue;
    const bool is_large = n == 2 && det > 2000 && det <= 10000;
    if (is_large ? large >= 2 : (n == 2 ? det > 300 : det > 8)) continue;
    if (!is_large && small >= 80) continue;
    const long den = is_large ? 1 : 1 + t % 3;
    oracle::Vec nums(n);
    IntVector inums(n);
    for (std::size_t i = 0; i < n; ++i) {
      nums[i] = num(rng) % den;
      inums[i] = nums[i];
    }
    const auto got = affine_fixed_points(m, TorsionPoint{inums, Integer(den)});
    REQUIRE(std::holds_alternative<Integer>(got));
    CHECK(std::get<Integer>(got) == oracle::grid_fixed_points(m, nums, den));
    CHECK(std::get<Integer>(got) == det);
    (is_large ? large : small)++;
  }
  CHECK(small == 80);
  CHECK(large == 2);
}
