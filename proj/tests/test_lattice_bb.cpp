#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"
#include "hkdual/lattice_bb.hpp"
#include "oracles.hpp"

using namespace hkdual;

namespace {

IntVector random_vector(std::size_t n, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

BBLattice kum_n(int n) { return BBLattice(lattices::kum2().gram(), Rational(n + 1), n, "Kum_n"); }

}  // namespace

TEST_CASE("lattice construction and validation") {
  const auto k = lattices::kum2();
  CHECK(k.rank() == 7);
  CHECK(k.fujiki_constant() == 3);
  CHECK(k.half_dim() == 2);
  CHECK(k.gram().determinant() == 6);
  CHECK_THROWS_AS(BBLattice(IntMatrix{{0, 1}, {2, 0}}, Rational(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(BBLattice(IntMatrix{{0, 0}, {0, 0}}, Rational(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(BBLattice(lattices::hyperbolic_plane(), Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(BBLattice(lattices::hyperbolic_plane(), Rational(1), 0), std::invalid_argument);
}

TEST_CASE("divisibility examples") {
  const BBLattice u(lattices::hyperbolic_plane(), Rational(1), 1);
  CHECK(divisibility(u, make_vector({1, 0})) == 1);
  const BBLattice r(lattices::rank_one(-6), Rational(1), 1);
  CHECK(divisibility(r, make_vector({1})) == 6);
  const auto k = lattices::kum2();
  CHECK(divisibility(k, make_vector({1, 0, 0, 0, 0, 0, 3})) == 1);
  CHECK(divisibility(k, make_vector({0, 0, 0, 0, 0, 0, 3})) == 18);
  CHECK_THROWS_AS(divisibility(k, IntVector(7, Integer(0))), std::invalid_argument);
  CHECK_THROWS_AS(divisibility(k, make_vector({1})), std::invalid_argument);
}

TEST_CASE("divisibility scales linearly") {
  std::mt19937_64 rng(17);
  const auto k = lattices::kum2();
  std::uniform_int_distribution<long> scale(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_vector(7, 6, rng);
    if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) continue;
    const long s = scale(rng);
    if (s == 0) continue;
    IntVector y = x;
    for (auto& v : y) v *= s;
    CHECK(divisibility(k, y) == std::abs(s) * divisibility(k, x));
  }
}

TEST_CASE("fujiki product: small cases and the h/x identity") {
  const auto k = lattices::kum2();
  const auto h = make_vector({1, 0, 0, 0, 0, 0, 0});
  const auto x = make_vector({0, 1, 0, 0, 0, 0, 1});
  CHECK(k.square(x) == -6);
  CHECK(k.pairing(h, x) == 1);
  const std::vector<IntVector> hhxx = {h, h, x, x};
  CHECK(fujiki_product(k, hhxx) == 6);

  const BBLattice one(lattices::kum2().gram(), Rational(5, 2), 1);
  const std::vector<IntVector> pair = {x, h};
  CHECK(fujiki_product(one, pair) == Rational(5, 2));
  CHECK_THROWS_AS(fujiki_product(k, std::vector<IntVector>{h, h}), std::invalid_argument);
}

TEST_CASE("fujiki product against the polarization oracle for n <= 5") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> half(1, 5);
  for (int t = 0; t < 60; ++t) {
    const int n = half(rng);
    const auto lat = kum_n(n);
    std::vector<IntVector> xs;
    for (int i = 0; i < 2 * n; ++i) xs.push_back(random_vector(7, 3, rng));
    const auto exec = t % 2 ? kernels::Exec::parallel : kernels::Exec::serial;
    CHECK(fujiki_product(lat, xs, exec) ==
          oracle::fujiki_by_polarization(lat.gram(), lat.fujiki_constant(), n, xs));
  }
}

TEST_CASE("fujiki relation on equal arguments and on the isotropic split") {
  std::mt19937_64 rng(1618);
  for (int n = 1; n <= 5; ++n) {
    const auto lat = kum_n(n);
    Rational fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int t = 0; t < 20; ++t) {
      const auto x = random_vector(7, 4, rng);
      const std::vector<IntVector> same(static_cast<std::size_t>(2 * n), x);
      CHECK(fujiki_product(lat, same) == fujiki_closed_form(lat, x));

      // h isotropic: a combination of e1 and e2 only pairs through f1, f2.
      IntVector h(7, Integer(0));
      h[0] = 1 + t % 3;
      h[2] = t % 2;
      REQUIRE(lat.square(h) == 0);
      std::vector<IntVector> split;
      for (int i = 0; i < n; ++i) split.push_back(h);
      for (int i = 0; i < n; ++i) split.push_back(x);
      Integer qhx_n = 1;
      for (int i = 0; i < n; ++i) qhx_n *= lat.pairing(h, x);
      CHECK(fujiki_product(lat, split) == lat.fujiki_constant() * fact * Rational(qhx_n));
    }
  }
}

TEST_CASE("fujiki product is symmetric in its arguments") {
  std::mt19937_64 rng(99);
  const auto lat = kum_n(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<IntVector> xs;
    for (int i = 0; i < 6; ++i) xs.push_back(random_vector(7, 3, rng));
    const auto base = fujiki_product(lat, xs);
    std::shuffle(xs.begin(), xs.end(), rng);
    CHECK(fujiki_product(lat, xs) == base);
  }
}

TEST_CASE("quotient Fujiki constant") {
  const auto k = lattices::kum2();
  CHECK(quotient_bb(k, Integer(1)).fujiki_constant() == 3);
  CHECK(quotient_bb(k, Integer(1)).gram() == k.gram());
  CHECK(quotient_bb(k, Integer(9)).fujiki_constant() == Rational(1, 3));
  CHECK(quotient_bb(quotient_bb(k, Integer(3)), Integer(4)).fujiki_constant() ==
        quotient_bb(k, Integer(12)).fujiki_constant());
  CHECK_THROWS_AS(quotient_bb(k, Integer(0)), std::invalid_argument);
}

TEST_CASE("order equals c squared") {
  for (long d1 = 1; d1 <= 4; ++d1)
    for (long d2 = d1; d1 * d2 <= 12; d2 += d1)
      CHECK(check_order_is_c_squared(Rational(d1 * d2), Integer(d1 * d2 * d1 * d2)));
  CHECK(check_order_is_c_squared(Rational(1), Integer(1)));
  CHECK_FALSE(check_order_is_c_squared(Rational(2), Integer(2)));
}
