#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkdual/int_matrix.hpp"

namespace hkdual {

enum class Series { B, D };

/// Dominant weight of so(2r+1) (B) or so(2r) (D) in the orthonormal basis,
/// stored doubled so half-integers stay exact: doubled = (2λ_1, ..., 2λ_r).
class HighestWeight {
 public:
  /// Throws std::invalid_argument if the weight is not dominant or mixes
  /// integer and half-integer entries.
  HighestWeight(Series series, std::vector<long> doubled);

  /// Integer weight (λ_1, ..., λ_r).
  static HighestWeight integral(Series series, std::vector<long> weight);
  /// Weight (k, 0, ..., 0) of so(dim).
  static HighestWeight symmetric_power(int so_dim, long k);
  /// (1/2, ..., 1/2) of so(dim).
  static HighestWeight spin(int so_dim);

  Series series() const { return series_; }
  std::size_t rank() const { return doubled_.size(); }
  const std::vector<long>& doubled() const { return doubled_; }
  /// Dimension of the defining representation, 2r+1 or 2r.
  int so_dim() const;
  /// "so(9) (2,0,0,0)", half-integers as "1/2".
  std::string to_string() const;

 private:
  Series series_;
  std::vector<long> doubled_;
};

/// Weyl dimension formula Π_{α>0} <λ+ρ, α> / <ρ, α>.
Integer weyl_dim(const HighestWeight& w);

/// Nonnegative dimensions by cohomological degree.
struct GradedDims {
  std::map<int, Integer> dims;

  Integer total() const;
  bool symmetric_about(int middle_degree) const;
};

/// Degree profile of the Verbitsky component V_(n) ⊂ H^*(X) for dim X = 2n and
/// b_2 = b2: Sym^k H^2 in degree 2k for k <= n, mirrored above the middle.
/// For n = 2 this is (1, b2, dim V_(2) - 2 - 2·b2, b2, 1).
GradedDims verbitsky_profile(long b2, long n);

/// One summand of an LLV decomposition: an irreducible module (or the trivial
/// one when `weight` is empty) with multiplicity and degree placement.
struct LLVSummand {
  std::optional<HighestWeight> weight;  // nullopt: trivial 1-dimensional module
  long multiplicity = 1;
  /// Degree -> dimension contributed by one copy; must add up to the module dimension.
  std::map<int, Integer> placement;
  std::string label;
};

struct BettiTable {
  std::vector<Integer> betti;  // index = degree
  Integer total;
  Integer euler;
};

/// Throws std::invalid_argument when a placement does not add up to the
/// dimension of its module or uses a negative degree.
BettiTable betti_table(const std::vector<LLVSummand>& decomposition);

namespace llv {

/// V_(2) of so(b2+2) graded by verbitsky_profile(b2, 2).
LLVSummand verbitsky_summand(long b2);
/// `count` trivial classes in `degree`.
LLVSummand trivial_summand(long count, int degree);
/// Spin module of so(so_dim), dimension split evenly between two degrees.
LLVSummand spin_summand(int so_dim, int low_degree, int high_degree);

/// V_(2) ⊕ 80Q ⊕ V_(1/2,1/2,1/2,1/2), b2 = 7.
std::vector<LLVSummand> kum2_decomposition();
/// V_(2) ⊕ 8Q ⊕ V_(1/2,1/2,1/2,1/2).
std::vector<LLVSummand> dual_kum2_decomposition();

}  // namespace llv

}  // namespace hkdual
