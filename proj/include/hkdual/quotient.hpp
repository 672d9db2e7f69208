#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkdual/int_matrix.hpp"

namespace hkdual {

/// Z/f_1 × ... × Z/f_k with every element and the full operation table
/// materialized. Elements are indexed in lexicographic order of their
/// coordinate tuples, so index 0 is the identity.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<long> factors);

  const std::vector<long>& factors() const { return factors_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<long>& element(std::size_t index) const { return elements_.at(index); }
  std::size_t index_of(const std::vector<long>& coords) const;
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t element_order(std::size_t a) const;
  /// Index of the i-th standard generator (0,..,1,..,0).
  std::size_t generator(std::size_t i) const;
  /// Sorted indices of the cyclic subgroup generated by a.
  std::vector<std::size_t> cyclic_subgroup(std::size_t a) const;
  std::string label(std::size_t a) const;

 private:
  std::vector<long> factors_;
  std::vector<std::vector<long>> elements_;
  std::vector<std::size_t> table_;
};

/// Action of an explicit finite abelian group on {0, ..., size-1} by a table
/// action(g, x). Validated on construction: the identity acts trivially and
/// (g·h)·x = g·(h·x).
class GroupAction {
 public:
  GroupAction(FiniteAbelianGroup group, std::size_t set_size, std::vector<std::size_t> table);

  /// Builds the table from one permutation per standard generator. Throws
  /// std::invalid_argument if the permutations do not define an action.
  static GroupAction from_generators(FiniteAbelianGroup group, std::size_t set_size,
                                     const std::vector<std::vector<std::size_t>>& generators);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t set_size() const { return set_size_; }
  std::size_t act(std::size_t g, std::size_t x) const { return table_[g * set_size_ + x]; }
  std::vector<std::size_t> fixed_points(std::size_t g) const;
  std::vector<std::size_t> stabilizer(std::size_t x) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t set_size_;
  std::vector<std::size_t> table_;
};

struct OrbitDecomposition {
  std::size_t orbit_count = 0;
  std::map<std::size_t, std::size_t> size_histogram;  // orbit size -> number of orbits
  std::vector<std::vector<std::size_t>> orbits;       // each sorted; ordered by least element
};

/// Orbits by traversal. Burnside's count (1/|G|)Σ|Fix(g)| is recomputed and a
/// mismatch throws std::logic_error.
OrbitDecomposition orbit_count(const GroupAction& action);

/// Fixed-set data for one nontrivial group element.
struct FixedPointEntry {
  std::vector<long> element;
  std::optional<Integer> cardinality;
  std::optional<Integer> euler;
};

/// The two-step quotient X → X/f → (X/f)/f'.
struct StepwiseQuotient {
  std::vector<long> first;
  std::vector<long> second;
  /// Fixed points of f' on X/f away from the image of Fix(f). Required when
  /// the ledger has no explicit action; ignored (recomputed) otherwise.
  std::optional<Integer> declared_new_fixed;
};

/// Fixed-locus data of a finite abelian group G acting on a space X, either
/// declared per element or carried as an explicit action of G on the union P
/// of all nontrivial fixed sets.
struct FixedPointLedger {
  std::string name;
  std::vector<long> group_factors;
  std::optional<Integer> euler_total;  // e(X)
  std::optional<GroupAction> action;   // on the union of fixed sets
  std::vector<FixedPointEntry> entries;
  std::optional<StepwiseQuotient> stepwise;
  /// Declares that distinct cyclic subgroups have disjoint fixed sets.
  bool disjoint_fixed_sets = false;

  FiniteAbelianGroup group() const { return FiniteAbelianGroup(group_factors); }
  const FixedPointEntry* find(const std::vector<long>& element) const;
  /// Throws std::invalid_argument on inconsistent data (X^g ≠ X^{g⁻¹}, declared
  /// counts disagreeing with the explicit action, group mismatch).
  void validate() const;
};

/// Translation model for n = 2: G = <τ1, τ2> ⊂ (Z/3)^4 (the first two
/// coordinate vectors) acting by translation on the 3-element orbits
/// {z, z+τ, z+2τ}, z ∈ (Z/3)^4, τ ∈ G nontrivial. Every nontrivial element
/// fixes 27 of them. Asserts disjointness of the fixed sets and that every
/// stabilizer has order 3.
FixedPointLedger kummer_translation_model();

/// Per-element fixed-point counts stated for the Kum_2 quotient, with 9 new
/// fixed points on X/f declared for the second step.
FixedPointLedger kummer_declared_ledger();

struct SingularityReport {
  // Two-step count: |Fix(f)| points, identified in <f'>-orbits, plus new ones.
  std::optional<Integer> stepwise_first;
  std::optional<Integer> stepwise_identified;
  std::optional<Integer> stepwise_new;
  std::optional<Integer> stepwise_count;
  // Orbit count of G on the union of fixed sets.
  std::optional<Integer> burnside_count;
  std::string burnside_source;
  bool burnside_identity_ok = true;
  /// Orbit counts grouped by stabilizer subgroup (explicit action only).
  std::map<std::string, std::size_t> per_stabilizer;
  /// Both counts exist and differ.
  bool discrepancy = false;
  std::vector<std::string> notes;
};

SingularityReport singularity_report(const FixedPointLedger& ledger);

/// (1/|G|)·(e_X + Σ_{g≠1} e(X^g)). Throws std::invalid_argument on missing data
/// or a group-order mismatch.
Rational orbifold_euler(const FixedPointLedger& ledger, const Integer& euler_x,
                        const Integer& group_order);

/// Exponent multisets (a_1 ≤ ... ≤ a_dim), 1 ≤ a_i < m, of diagonal actions
/// diag(ζ^{a_i}) of Z/m on C^dim without eigenvalue 1 that preserve some
/// nondegenerate alternating form. Requires m prime and even dim ≤ 8.
std::vector<std::vector<int>> symplectic_cyclic_local_types(int m, int dim);

/// "1/3(1,1,2,2)"
std::string local_type_label(int m, const std::vector<int>& exponents);

}  // namespace hkdual
