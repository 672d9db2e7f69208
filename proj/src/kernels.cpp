#include "hkdual/kernels.hpp"

#include <omp.h>

#include <stdexcept>

namespace hkdual::kernels {

namespace {

std::uint64_t box_size(std::int64_t radix, std::size_t cols, std::uint64_t limit) {
  if (radix < 1) throw std::invalid_argument("enumeration radix must be positive");
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < cols; ++j) {
    if (total > limit / static_cast<std::uint64_t>(radix))
      throw std::length_error("enumeration box exceeds limit");
    total *= static_cast<std::uint64_t>(radix);
  }
  return total;
}

// Decodes `index` as a base-`radix` little-endian digit vector.
void decode(std::uint64_t index, std::int64_t radix, std::vector<std::int64_t>& digits) {
  for (auto& d : digits) {
    d = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(radix));
    index /= static_cast<std::uint64_t>(radix);
  }
}

bool satisfies(const ModSystem& sys, const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < sys.rows; ++i) {
    std::int64_t acc = 0;
    const std::int64_t* row = sys.a.data() + i * sys.cols;
    for (std::size_t j = 0; j < sys.cols; ++j) acc = (acc + row[j] * v[j]) % sys.modulus;
    if (acc != sys.rhs[i]) return false;
  }
  return true;
}

Integer matching_sum_rec(const IntMatrix& q, std::vector<bool>& used) {
  const std::size_t n = used.size();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) return Integer(1);
  used[first] = true;
  Integer total(0);
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used[j] || q(first, j) == 0) continue;
    used[j] = true;
    total += q(first, j) * matching_sum_rec(q, used);
    used[j] = false;
  }
  used[first] = false;
  return total;
}

}  // namespace

ModSystem ModSystem::make(const IntMatrix& a, const IntVector& b, const Integer& modulus) {
  if (modulus < 1 || !modulus.fits_sint_p() || modulus > 2'147'483'647L)
    throw std::invalid_argument("modulus out of enumeration range");
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  ModSystem sys;
  sys.rows = a.rows();
  sys.cols = a.cols();
  sys.modulus = modulus.get_si();
  sys.a.reserve(sys.rows * sys.cols);
  for (std::size_t i = 0; i < sys.rows; ++i)
    for (std::size_t j = 0; j < sys.cols; ++j)
      sys.a.push_back(mod_floor(a(i, j), modulus).get_si());
  for (const auto& bi : b) sys.rhs.push_back(mod_floor(bi, modulus).get_si());
  return sys;
}

std::uint64_t count_box_solutions(const ModSystem& sys, std::int64_t radix, Exec exec,
                                  std::uint64_t limit) {
  const std::uint64_t total = box_size(radix, sys.cols, limit);
  std::uint64_t count = 0;
  if (exec == Exec::serial) {
    std::vector<std::int64_t> v(sys.cols);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, radix, v);
      if (satisfies(sys, v)) ++count;
    }
    return count;
  }
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(+ : count)
  {
    std::vector<std::int64_t> v(sys.cols);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(static_cast<std::uint64_t>(idx), radix, v);
      if (satisfies(sys, v)) ++count;
    }
  }
  return count;
}

std::vector<std::vector<std::int64_t>> list_box_solutions(const ModSystem& sys,
                                                          std::int64_t radix, Exec exec,
                                                          std::uint64_t limit) {
  const std::uint64_t total = box_size(radix, sys.cols, limit);
  // Big-endian ordering: digit 0 is most significant, giving lexicographic output.
  auto decode_lex = [&](std::uint64_t idx, std::vector<std::int64_t>& v) {
    for (std::size_t j = sys.cols; j-- > 0;) {
      v[j] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(radix));
      idx /= static_cast<std::uint64_t>(radix);
    }
  };
  std::vector<std::vector<std::int64_t>> out;
  if (exec == Exec::serial) {
    std::vector<std::int64_t> v(sys.cols);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode_lex(idx, v);
      if (satisfies(sys, v)) out.push_back(v);
    }
    return out;
  }
  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::vector<std::int64_t>>> parts(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel num_threads(threads)
  {
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::int64_t> v(sys.cols);
    // Static contiguous chunks keep per-thread results in global index order.
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode_lex(static_cast<std::uint64_t>(idx), v);
      if (satisfies(sys, v)) mine.push_back(v);
    }
  }
  for (auto& part : parts)
    for (auto& v : part) out.push_back(std::move(v));
  return out;
}

Integer matching_sum(const IntMatrix& pairing, Exec exec) {
  const std::size_t n = pairing.rows();
  if (!pairing.is_square() || n % 2 != 0)
    throw std::invalid_argument("matching_sum needs an even square pairing table");
  if (n == 0) return Integer(1);
  if (exec == Exec::serial) {
    std::vector<bool> used(n, false);
    return matching_sum_rec(pairing, used);
  }
  std::vector<Integer> partial(n, Integer(0));
  const auto partners = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 1; j < partners; ++j) {
    const auto pj = static_cast<std::size_t>(j);
    if (pairing(0, pj) == 0) continue;
    std::vector<bool> used(n, false);
    used[0] = true;
    used[pj] = true;
    partial[pj] = pairing(0, pj) * matching_sum_rec(pairing, used);
  }
  Integer total(0);
  for (const auto& p : partial) total += p;
  return total;
}

std::uint64_t matching_count(std::size_t two_n) {
  if (two_n % 2 != 0) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t k = two_n == 0 ? 1 : two_n - 1; k > 1; k -= 2) out *= k;
  return out;
}

}  // namespace hkdual::kernels
