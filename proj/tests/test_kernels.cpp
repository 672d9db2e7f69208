#include <algorithm>
#include <random>

#include "doctest.h"
#include "hkdual/kernels.hpp"
#include "oracles.hpp"

using namespace hkdual;
using kernels::Exec;

TEST_CASE("box enumeration: serial and parallel agree with the oracle") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> mod(2, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const long m = mod(rng);
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto a = oracle::random_matrix(rows, cols, -9, 9, rng);
    const auto bm = oracle::random_matrix(rows, 1, -9, 9, rng);
    oracle::Vec b;
    for (std::size_t i = 0; i < rows; ++i) b.push_back(bm(i, 0).get_si());
    const auto sys = kernels::ModSystem::make(a, bm.column(0), Integer(m));

    const auto serial = kernels::count_box_solutions(sys, m, Exec::serial);
    const auto parallel = kernels::count_box_solutions(sys, m, Exec::parallel);
    CHECK(serial == parallel);
    CHECK(serial == oracle::affine_solution_count(a, b, m));

    const auto ls = kernels::list_box_solutions(sys, m, Exec::serial);
    const auto lp = kernels::list_box_solutions(sys, m, Exec::parallel);
    CHECK(ls == lp);
    CHECK(ls.size() == serial);
    CHECK(std::is_sorted(ls.begin(), ls.end()));
  }
}

TEST_CASE("radix smaller than the modulus restricts the box") {
  const auto sys = kernels::ModSystem::make(IntMatrix{{1, 1}}, make_vector({0}), Integer(4));
  // v1 + v2 ≡ 0 mod 4 with v in {0,1,2}^2: (0,0), (1,... none), (2,2)
  CHECK(kernels::count_box_solutions(sys, 3, Exec::serial) == 2);
  CHECK(kernels::count_box_solutions(sys, 3, Exec::parallel) == 2);
}

TEST_CASE("enumeration guards") {
  const auto sys = kernels::ModSystem::make(IntMatrix(1, 10), make_vector({0}), Integer(10));
  CHECK_THROWS_AS(kernels::count_box_solutions(sys, 10, Exec::serial, 1000), std::length_error);
  CHECK_THROWS_AS(kernels::ModSystem::make(IntMatrix(1, 1), make_vector({0}), Integer("4294967296")),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernels::ModSystem::make(IntMatrix(2, 1), make_vector({0}), Integer(3)),
                  std::invalid_argument);
}

TEST_CASE("matching sums: serial equals parallel and counts are (2n-1)!!") {
  CHECK(kernels::matching_count(2) == 1);
  CHECK(kernels::matching_count(4) == 3);
  CHECK(kernels::matching_count(12) == 10395);
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto p = oracle::random_matrix(2 * n, 2 * n, -5, 5, rng);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < i; ++j) p(i, j) = p(j, i);
    CHECK(kernels::matching_sum(p, Exec::serial) == kernels::matching_sum(p, Exec::parallel));
  }
  IntMatrix ones(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) ones(i, j) = 1;
  CHECK(kernels::matching_sum(ones, Exec::parallel) == 15);
}
