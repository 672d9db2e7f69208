#include "hkdual/quotient.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hkdual {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
  std::size_t order = 1;
  for (long f : factors_) {
    if (f < 1) throw std::invalid_argument("cyclic factor orders must be positive");
    order *= static_cast<std::size_t>(f);
    if (order > 1'000'000) throw std::invalid_argument("explicit group too large");
  }
  elements_.reserve(order);
  std::vector<long> coords(factors_.size(), 0);
  for (std::size_t idx = 0; idx < order; ++idx) {
    elements_.push_back(coords);
    for (std::size_t k = factors_.size(); k-- > 0;) {
      if (++coords[k] < factors_[k]) break;
      coords[k] = 0;
    }
  }
  table_.resize(order * order);
  std::vector<long> sum(factors_.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t k = 0; k < factors_.size(); ++k)
        sum[k] = (elements_[a][k] + elements_[b][k]) % factors_[k];
      table_[a * order + b] = index_of(sum);
    }
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<long>& coords) const {
  if (coords.size() != factors_.size()) throw std::invalid_argument("group element has wrong length");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    long c = coords[k] % factors_[k];
    if (c < 0) c += factors_[k];
    idx = idx * static_cast<std::size_t>(factors_[k]) + static_cast<std::size_t>(c);
  }
  return idx;
}

std::size_t FiniteAbelianGroup::inverse(std::size_t a) const {
  std::vector<long> neg = elements_.at(a);
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = (factors_[k] - neg[k]) % factors_[k];
  return index_of(neg);
}

std::size_t FiniteAbelianGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t cur = a; cur != 0; cur = op(cur, a)) ++k;
  return k;
}

std::size_t FiniteAbelianGroup::generator(std::size_t i) const {
  std::vector<long> coords(factors_.size(), 0);
  coords.at(i) = 1;
  return index_of(coords);
}

std::vector<std::size_t> FiniteAbelianGroup::cyclic_subgroup(std::size_t a) const {
  std::vector<std::size_t> out{0};
  for (std::size_t cur = a; cur != 0; cur = op(cur, a)) out.push_back(cur);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FiniteAbelianGroup::label(std::size_t a) const {
  std::string out = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(elements_.at(a)[k]);
  }
  return out + ")";
}

GroupAction::GroupAction(FiniteAbelianGroup group, std::size_t set_size,
                         std::vector<std::size_t> table)
    : group_(std::move(group)), set_size_(set_size), table_(std::move(table)) {
  const std::size_t order = group_.order();
  if (table_.size() != order * set_size_) throw std::invalid_argument("action table has wrong size");
  for (auto v : table_)
    if (v >= set_size_) throw std::invalid_argument("action table entry out of range");
  for (std::size_t x = 0; x < set_size_; ++x)
    if (act(0, x) != x) throw std::invalid_argument("identity does not act trivially");
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      for (std::size_t x = 0; x < set_size_; ++x)
        if (act(group_.op(g, h), x) != act(g, act(h, x)))
          throw std::invalid_argument("action table violates (gh)·x = g·(h·x)");
}

GroupAction GroupAction::from_generators(FiniteAbelianGroup group, std::size_t set_size,
                                         const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.size() != group.factors().size())
    throw std::invalid_argument("need one permutation per cyclic factor");
  for (const auto& perm : generators) {
    if (perm.size() != set_size) throw std::invalid_argument("generator permutation has wrong length");
    std::vector<bool> hit(set_size, false);
    for (auto v : perm) {
      if (v >= set_size || hit[v]) throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }
  std::vector<std::size_t> table(group.order() * set_size);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto& coords = group.element(g);
    for (std::size_t x = 0; x < set_size; ++x) {
      std::size_t y = x;
      for (std::size_t k = 0; k < coords.size(); ++k)
        for (long rep = 0; rep < coords[k]; ++rep) y = generators[k][y];
      table[g * set_size + x] = y;
    }
  }
  return GroupAction(std::move(group), set_size, std::move(table));
}

std::vector<std::size_t> GroupAction::fixed_points(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < set_size_; ++x)
    if (act(g, x) == x) out.push_back(x);
  return out;
}

std::vector<std::size_t> GroupAction::stabilizer(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < group_.order(); ++g)
    if (act(g, x) == x) out.push_back(g);
  return out;
}

OrbitDecomposition orbit_count(const GroupAction& action) {
  OrbitDecomposition out;
  std::vector<bool> seen(action.set_size(), false);
  for (std::size_t x = 0; x < action.set_size(); ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      const std::size_t y = action.act(g, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ++out.size_histogram[orbit.size()];
    out.orbits.push_back(std::move(orbit));
  }
  out.orbit_count = out.orbits.size();

  std::size_t fixed_total = 0;
  for (std::size_t g = 0; g < action.group().order(); ++g) fixed_total += action.fixed_points(g).size();
  if (fixed_total != out.orbit_count * action.group().order())
    throw std::logic_error("Burnside identity failed: orbit traversal disagrees with fixed-point sum");
  return out;
}

const FixedPointEntry* FixedPointLedger::find(const std::vector<long>& element) const {
  const auto g = group();
  const std::size_t idx = g.index_of(element);
  for (const auto& e : entries)
    if (g.index_of(e.element) == idx) return &e;
  return nullptr;
}

void FixedPointLedger::validate() const {
  if (group_factors.empty()) throw std::invalid_argument("ledger group has no factors");
  const auto g = group();
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    const std::size_t idx = g.index_of(e.element);
    if (idx == 0) throw std::invalid_argument("ledger entry for the identity element");
    if (!seen.insert(idx).second) throw std::invalid_argument("duplicate ledger entry " + g.label(idx));
    if (e.cardinality && *e.cardinality < 0) throw std::invalid_argument("negative fixed-point count");
    if (const auto* inv = find(g.element(g.inverse(idx)))) {
      if (inv->cardinality != e.cardinality || inv->euler != e.euler)
        throw std::invalid_argument("fixed data of " + g.label(idx) + " and its inverse differ");
    }
  }
  if (action) {
    if (action->group().factors() != group_factors)
      throw std::invalid_argument("explicit action group differs from the ledger group");
    for (const auto& e : entries)
      if (e.cardinality && *e.cardinality != action->fixed_points(g.index_of(e.element)).size())
        throw std::invalid_argument("declared fixed-point count disagrees with the explicit action");
  }
  if (stepwise) {
    const std::size_t f = g.index_of(stepwise->first);
    const std::size_t f2 = g.index_of(stepwise->second);
    if (f == 0 || f2 == 0) throw std::invalid_argument("stepwise quotient needs nontrivial elements");
  }
}

FixedPointLedger kummer_translation_model() {
  constexpr long p = 3;
  const FiniteAbelianGroup ambient({p, p, p, p});
  FiniteAbelianGroup group({p, p});
  // G ↪ (Z/3)^4 on the first two coordinates.
  auto embed = [&](std::size_t g) {
    const auto& c = group.element(g);
    return ambient.index_of({c[0], c[1], 0, 0});
  };

  using Triple = std::array<std::size_t, 3>;
  std::map<Triple, std::size_t> point_id;
  std::vector<Triple> points;
  auto triple_of = [&](std::size_t z, std::size_t tau) {
    Triple t{z, ambient.op(z, tau), ambient.op(ambient.op(z, tau), tau)};
    std::sort(t.begin(), t.end());
    return t;
  };
  std::set<std::vector<std::size_t>> lines;
  for (std::size_t g = 1; g < group.order(); ++g) {
    auto line = group.cyclic_subgroup(g);
    if (!lines.insert(line).second) continue;
    std::size_t fresh = 0;
    for (std::size_t z = 0; z < ambient.order(); ++z) {
      const Triple t = triple_of(z, embed(g));
      if (point_id.count(t)) continue;
      point_id.emplace(t, points.size());
      points.push_back(t);
      ++fresh;
    }
    if (fresh != 27) throw std::logic_error("fixed sets of distinct order-3 subgroups overlap");
  }

  std::vector<std::size_t> table(group.order() * points.size());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const std::size_t tau = embed(g);
    for (std::size_t x = 0; x < points.size(); ++x) {
      Triple moved;
      for (std::size_t k = 0; k < 3; ++k) moved[k] = ambient.op(points[x][k], tau);
      std::sort(moved.begin(), moved.end());
      table[g * points.size() + x] = point_id.at(moved);
    }
  }
  GroupAction action(group, points.size(), std::move(table));
  for (std::size_t x = 0; x < action.set_size(); ++x)
    if (action.stabilizer(x).size() != 3) throw std::logic_error("model stabilizer is not of order 3");

  FixedPointLedger ledger;
  ledger.name = "kum2-translation-model";
  ledger.group_factors = {p, p};
  ledger.euler_total = Integer(108);
  for (std::size_t g = 1; g < group.order(); ++g) {
    const Integer count(static_cast<unsigned long>(action.fixed_points(g).size()));
    ledger.entries.push_back(FixedPointEntry{group.element(g), count, count});
  }
  ledger.action = std::move(action);
  ledger.stepwise = StepwiseQuotient{{1, 0}, {0, 1}, std::nullopt};
  ledger.disjoint_fixed_sets = true;
  ledger.validate();
  return ledger;
}

FixedPointLedger kummer_declared_ledger() {
  FixedPointLedger ledger;
  ledger.name = "kum2-declared";
  ledger.group_factors = {3, 3};
  ledger.euler_total = Integer(108);
  const FiniteAbelianGroup group(ledger.group_factors);
  for (std::size_t g = 1; g < group.order(); ++g)
    ledger.entries.push_back(FixedPointEntry{group.element(g), Integer(27), Integer(27)});
  ledger.stepwise = StepwiseQuotient{{1, 0}, {0, 1}, Integer(9)};
  ledger.disjoint_fixed_sets = true;
  ledger.validate();
  return ledger;
}

namespace {

bool is_prime(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

void stepwise_explicit(const FixedPointLedger& ledger, SingularityReport& report) {
  const auto& action = *ledger.action;
  const auto& g = action.group();
  const std::size_t f = g.index_of(ledger.stepwise->first);
  const std::size_t f2 = g.index_of(ledger.stepwise->second);
  const auto fix_f = action.fixed_points(f);
  const std::set<std::size_t> fix_set(fix_f.begin(), fix_f.end());

  // <f'>-orbits on Fix(f): how the second quotient identifies the first singularities.
  const auto cyc2 = g.cyclic_subgroup(f2);
  std::set<std::vector<std::size_t>> identified;
  for (auto x : fix_f) {
    std::set<std::size_t> orbit;
    for (auto h : cyc2) orbit.insert(action.act(h, x));
    identified.insert({orbit.begin(), orbit.end()});
  }
  // <f>-orbits outside Fix(f) mapped to themselves by f': new fixed points on X/f.
  const auto cyc1 = g.cyclic_subgroup(f);
  std::set<std::vector<std::size_t>> fresh;
  for (std::size_t x = 0; x < action.set_size(); ++x) {
    if (fix_set.count(x)) continue;
    std::set<std::size_t> orbit;
    for (auto h : cyc1) orbit.insert(action.act(h, x));
    if (orbit.count(action.act(f2, x))) fresh.insert({orbit.begin(), orbit.end()});
  }
  report.stepwise_first = Integer(static_cast<unsigned long>(fix_f.size()));
  report.stepwise_identified = Integer(static_cast<unsigned long>(identified.size()));
  report.stepwise_new = Integer(static_cast<unsigned long>(fresh.size()));
  if (ledger.stepwise->declared_new_fixed && *ledger.stepwise->declared_new_fixed != *report.stepwise_new)
    report.notes.push_back("declared new fixed points (" + ledger.stepwise->declared_new_fixed->get_str() +
                           ") replaced by the explicit count (" + report.stepwise_new->get_str() + ")");
}

void stepwise_declared(const FixedPointLedger& ledger, SingularityReport& report) {
  const auto g = ledger.group();
  const auto* first = ledger.find(ledger.stepwise->first);
  if (!first || !first->cardinality || !ledger.stepwise->declared_new_fixed) {
    report.notes.push_back("stepwise count unavailable: missing |Fix(f)| or declared new fixed points");
    return;
  }
  const auto ord2 = static_cast<long>(g.element_order(g.index_of(ledger.stepwise->second)));
  if (!ledger.disjoint_fixed_sets)
    report.notes.push_back("stepwise count assumes f' acts freely on Fix(f)");
  if (!mpz_divisible_ui_p(first->cardinality->get_mpz_t(), static_cast<unsigned long>(ord2))) {
    report.notes.push_back("|Fix(f)| is not divisible by ord(f'); f' cannot act freely on it");
    report.burnside_identity_ok = false;
    return;
  }
  report.stepwise_first = *first->cardinality;
  report.stepwise_identified = *first->cardinality / ord2;
  report.stepwise_new = *ledger.stepwise->declared_new_fixed;
}

void burnside_declared(const FixedPointLedger& ledger, SingularityReport& report) {
  const auto g = ledger.group();
  if (!ledger.disjoint_fixed_sets) {
    report.notes.push_back("Burnside count needs disjoint fixed sets or an explicit action");
    return;
  }
  std::optional<std::size_t> prime;
  Integer fixed_sum(0);
  for (std::size_t idx = 1; idx < g.order(); ++idx) {
    const auto* e = ledger.find(g.element(idx));
    if (!e || !e->cardinality) {
      report.notes.push_back("Burnside count needs |Fix(g)| for every nontrivial g");
      return;
    }
    const std::size_t ord = g.element_order(idx);
    if (prime && *prime != ord) prime = 0;
    if (!prime) prime = ord;
    fixed_sum += *e->cardinality;
  }
  if (!prime || *prime == 0 || !is_prime(static_cast<long>(*prime))) {
    report.notes.push_back("declared Burnside count implemented for groups of prime exponent only");
    return;
  }
  // Each point of P is fixed by exactly the p-1 nontrivial elements of its stabilizer.
  const auto p = static_cast<unsigned long>(*prime);
  if (!mpz_divisible_ui_p(fixed_sum.get_mpz_t(), p - 1)) {
    report.burnside_identity_ok = false;
    return;
  }
  const Integer union_size = fixed_sum / (p - 1);
  const Integer numerator = union_size + fixed_sum;
  const Integer order(static_cast<unsigned long>(g.order()));
  if (!mpz_divisible_p(numerator.get_mpz_t(), order.get_mpz_t())) {
    report.burnside_identity_ok = false;
    report.notes.push_back("declared counts violate the Burnside identity");
    return;
  }
  report.burnside_count = numerator / order;
  report.burnside_source = "declared fixed-point counts, disjoint fixed sets";
}

}  // namespace

SingularityReport singularity_report(const FixedPointLedger& ledger) {
  ledger.validate();
  SingularityReport report;
  if (ledger.action) {
    const auto& action = *ledger.action;
    const auto orbits = orbit_count(action);
    std::size_t singular = 0;
    for (const auto& orbit : orbits.orbits) {
      const auto stab = action.stabilizer(orbit.front());
      if (stab.size() <= 1) continue;
      ++singular;
      std::string key = "<";
      for (std::size_t i = 1; i < stab.size(); ++i) {
        if (i > 1) key += ",";
        key += action.group().label(stab[i]);
      }
      ++report.per_stabilizer[key + ">"];
    }
    report.burnside_count = Integer(static_cast<unsigned long>(singular));
    report.burnside_source = "explicit action";
    if (ledger.stepwise) stepwise_explicit(ledger, report);
  } else {
    burnside_declared(ledger, report);
    if (ledger.stepwise) stepwise_declared(ledger, report);
  }
  if (report.stepwise_first) report.stepwise_count = *report.stepwise_identified + *report.stepwise_new;
  if (report.stepwise_count && report.burnside_count && *report.stepwise_count != *report.burnside_count) {
    report.discrepancy = true;
    report.notes.push_back("stepwise count " + report.stepwise_count->get_str() +
                           " differs from the orbit count " + report.burnside_count->get_str());
  }
  return report;
}

Rational orbifold_euler(const FixedPointLedger& ledger, const Integer& euler_x,
                        const Integer& group_order) {
  ledger.validate();
  const auto g = ledger.group();
  if (group_order != static_cast<unsigned long>(g.order()))
    throw std::invalid_argument("group order does not match the ledger group");
  Integer total = euler_x;
  for (std::size_t idx = 1; idx < g.order(); ++idx) {
    const auto* e = ledger.find(g.element(idx));
    if (e && e->euler) {
      total += *e->euler;
    } else if (ledger.action) {
      total += static_cast<unsigned long>(ledger.action->fixed_points(idx).size());
    } else {
      throw std::invalid_argument("missing Euler characteristic of X^g for g = " + g.label(idx));
    }
  }
  Rational out(total, group_order);
  out.canonicalize();
  return out;
}

std::vector<std::vector<int>> symplectic_cyclic_local_types(int m, int dim) {
  if (!is_prime(m)) throw std::invalid_argument("local types need a prime order");
  if (dim < 2 || dim > 8 || dim % 2 != 0) throw std::invalid_argument("dimension must be even, 2..8");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int lowest) {
    if (static_cast<int>(current.size()) == dim) {
      std::vector<int> count(static_cast<std::size_t>(m), 0);
      for (int a : current) ++count[static_cast<std::size_t>(a)];
      for (int a = 1; a < m; ++a) {
        const int b = m - a;
        if (a == b && count[static_cast<std::size_t>(a)] % 2 != 0) return;
        if (count[static_cast<std::size_t>(a)] != count[static_cast<std::size_t>(b)]) return;
      }
      out.push_back(current);
      return;
    }
    for (int a = lowest; a < m; ++a) {
      current.push_back(a);
      rec(a);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string local_type_label(int m, const std::vector<int>& exponents) {
  std::ostringstream os;
  os << "1/" << m << "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  os << ")";
  return os.str();
}

}  // namespace hkdual
