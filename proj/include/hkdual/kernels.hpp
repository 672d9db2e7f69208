#pragma once

// Exhaustive enumeration kernels. Each has a serial reference and an OpenMP
// variant; both return identical results for identical inputs. They back the
// brute-force cross-checks and are deliberately independent of the Smith-form
// code paths they are used to verify.

#include <cstdint>
#include <vector>

#include "hkdual/int_matrix.hpp"

namespace hkdual::kernels {

enum class Exec { serial, parallel };

/// Integer matrix reduced to machine words for enumeration. Entries are stored
/// reduced mod `modulus`, so products stay far from overflow for the sizes
/// enumeration can reach.
struct ModSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> a;    // rows x cols, row-major, in [0, modulus)
  std::vector<std::int64_t> rhs;  // rows, in [0, modulus)

  static ModSystem make(const IntMatrix& a, const IntVector& b, const Integer& modulus);
};

/// #{v ∈ [0, radix)^cols : A·v ≡ b (mod modulus)}. Throws std::length_error
/// when radix^cols exceeds `limit`.
std::uint64_t count_box_solutions(const ModSystem& sys, std::int64_t radix, Exec exec,
                                  std::uint64_t limit = 100'000'000);

/// Every v ∈ [0, radix)^cols with A·v ≡ b, in lexicographic order.
std::vector<std::vector<std::int64_t>> list_box_solutions(const ModSystem& sys,
                                                          std::int64_t radix, Exec exec,
                                                          std::uint64_t limit = 20'000'000);

/// Σ over perfect matchings of {0..2n-1} of Π pairing(i, j), each matching once.
/// The parallel variant splits on the partner of index 0 and combines the
/// partial sums in partner order, so the result is bitwise deterministic.
Integer matching_sum(const IntMatrix& pairing, Exec exec);

/// Number of perfect matchings of {0..2n-1}: (2n-1)!!.
std::uint64_t matching_count(std::size_t two_n);

}  // namespace hkdual::kernels
