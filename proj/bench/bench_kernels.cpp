// Serial reference vs OpenMP variant of each enumeration kernel.

#include <benchmark/benchmark.h>

#include "hkdual/kernels.hpp"
#include "hkdual/lattice_bb.hpp"

using namespace hkdual;
using kernels::Exec;

namespace {

// 2x4 system mod 12 from the translation condition of a (2,6) configuration.
kernels::ModSystem box_system() {
  const IntMatrix a{{0, 0, 2, 0}, {0, 0, 0, 6}};
  return kernels::ModSystem::make(a, make_vector({0, 0}), Integer(12));
}

void BM_CountBox(benchmark::State& state, Exec exec) {
  const auto sys = box_system();
  const auto radix = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_box_solutions(sys, radix, exec));
  state.SetItemsProcessed(state.iterations() * radix * radix * radix * radix);
}

void BM_MatchingSum(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix p(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) p(i, j) = static_cast<long>((i * 7 + j * 3) % 11) - 5;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < i; ++j) p(i, j) = p(j, i);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matching_sum(p, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kernels::matching_count(2 * n)));
}

void BM_Fujiki(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const BBLattice lat(lattices::kum2().gram(), Rational(n + 1), n);
  std::vector<IntVector> xs;
  for (int i = 0; i < 2 * n; ++i) {
    IntVector v(7);
    for (int k = 0; k < 7; ++k) v[static_cast<std::size_t>(k)] = (i * 5 + k * 3) % 7 - 3;
    xs.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fujiki_product(lat, xs, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_CountBox, serial, Exec::serial)->Arg(12)->Arg(24)->Arg(48);
BENCHMARK_CAPTURE(BM_CountBox, parallel, Exec::parallel)->Arg(12)->Arg(24)->Arg(48);
BENCHMARK_CAPTURE(BM_MatchingSum, serial, Exec::serial)->DenseRange(4, 7);
BENCHMARK_CAPTURE(BM_MatchingSum, parallel, Exec::parallel)->DenseRange(4, 7);
BENCHMARK_CAPTURE(BM_Fujiki, serial, Exec::serial)->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_Fujiki, parallel, Exec::parallel)->DenseRange(2, 5);

BENCHMARK_MAIN();
