// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "hkdual/exterior.hpp"
#include "hkdual/intlin.hpp"
#include "hkdual/kummer.hpp"
#include "hkdual/lattice_bb.hpp"
#include "hkdual/llv.hpp"
#include "hkdual/quotient.hpp"
#include "hkdual/torus.hpp"
#include "oracles.hpp"

using namespace hkdual;

namespace {

// Collects the first few failures of one criterion.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<void(Tally&)> body;
};

long gcd(long a, long b) { return std::gcd(a, b); }

std::string str(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

void kernel_identity(Tally& t) {
  for (long d1 = 1; d1 <= 12; ++d1)
    for (long d2 = d1; d1 * d2 <= 12; d2 += d1) {
      const auto phi = polarization_isogeny(PolarizedTorus::standard(d1, d2));
      const auto k = isogeny_kernel(dual_polarization(phi, Integer(d1 * d2)));
      t.expect(k == FinAbGroup::from_cyclic_orders(make_vector({d1, d2, d1, d2})),
               "(" + std::to_string(d1) + "," + std::to_string(d2) + "): " + k.to_string());
    }
}

std::vector<ModuliConfig> kum_configs() {
  std::vector<ModuliConfig> out;
  for (const auto& c : enumerate_configs(12, -12, 24))
    if (c.s >= -c.order() && c.s <= 2 * c.order()) out.push_back(c);
  return out;
}

std::string label(const ModuliConfig& c) {
  return "n=" + std::to_string(c.n) + " (" + std::to_string(c.d1) + "," + std::to_string(c.d2) +
         ") s=" + std::to_string(c.s);
}

void galois_group(Tally& t) {
  for (const auto& c : kum_configs()) {
    if (!c.gcd_condition()) continue;
    const auto k = translation_subgroup(c);
    t.expect(k == FinAbGroup::cyclic_power(Integer(c.order()), 4), label(c) + ": " + k.to_string());
    t.expect(k.order() == cokernel(minimal_isogeny_matrix(c)).order(), label(c) + ": |coker M_phi|");
  }
}

void factorization(Tally& t) {
  for (const auto& c : kum_configs()) {
    const auto prod = minimal_isogeny_matrix(c) * complementary_isogeny_matrix(c);
    t.expect(prod == IntMatrix::scalar(8, Integer(c.order())), label(c) + ": " + str(prod));
  }
}

void cup_product(Tally& t) {
  for (long d2 = 1; d2 <= 12; ++d2)
    for (long d1 = 1; d1 <= d2; ++d1) {
      if (d2 % d1) continue;
      const auto l = ample_class(d1, d2);
      const auto tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      t.expect(cup_with_l_matrix(l) == dual_phi_matrix(d1, d2), tag + " matrix");
      auto e = [](std::vector<int> idx, long c) { return ExtClass::basis(2, idx, Integer(c)); };
      t.expect(wedge(l, e({0}, 1)) == e({0, 1, 3}, d2), tag + " e1");
      t.expect(wedge(l, e({1}, 1)) == e({0, 1, 2}, -d1), tag + " e2");
      t.expect(wedge(l, e({2}, 1)) == e({1, 2, 3}, -d2), tag + " e3");
      t.expect(wedge(l, e({3}, 1)) == e({0, 2, 3}, d1), tag + " e4");
    }
}

void a_lemma(Tally& t) {
  for (long p = 1; p <= 8; ++p)
    for (long q = 1; q <= 8; ++q)
      for (long s = -8; s <= 8; ++s) {
        // kernel_mod needs m = pq >= 2
        if (p * q < 2 || s == 0 || (gcd(p, s) != 1 && gcd(q, s) != 1)) continue;
        const IntMatrix a{{p, 0}, {-s, q}};
        const auto tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " s=" + std::to_string(s);
        const auto k = kernel_mod(a, Integer(p * q));
        t.expect(k == FinAbGroup::cyclic_power(Integer(p * q), 1), tag + ": " + k.to_string());
        if (p * q <= 36) t.expect(oracle::kernel_mod_factors(a, p * q) == oracle::Vec{p * q}, tag + " enum");
      }
}

void fujiki_identities(Tally& t) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> coord(-4, 4);
  std::uniform_int_distribution<int> half(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = half(rng);
    const BBLattice lat(lattices::kum2().gram(), Rational(n + 1), n, "Kum_n");
    IntVector x(7);
    for (auto& v : x) v = coord(rng);
    // c·(2n)!/(2^n n!)·q(x)^n
    Rational expected = lat.fujiki_constant();
    Integer num = 1, den = 1;
    for (int i = 1; i <= 2 * n; ++i) num *= i;
    for (int i = 1; i <= n; ++i) den *= 2 * i;
    Integer qn = 1;
    for (int i = 0; i < n; ++i) qn *= lat.square(x);
    Rational factor(num * qn, den);
    factor.canonicalize();
    expected *= factor;
    const std::vector<IntVector> same(static_cast<std::size_t>(2 * n), x);
    t.expect(fujiki_product(lat, same) == expected, "equal arguments, trial " + std::to_string(trial));

    // h in the isotropic span of e1, e2 (q(e_i, e_j) = 0)
    IntVector h(7, Integer(0));
    h[0] = coord(rng);
    h[2] = coord(rng);
    if (h[0] == 0 && h[2] == 0) h[0] = 1;
    std::vector<IntVector> split(static_cast<std::size_t>(n), h);
    split.insert(split.end(), static_cast<std::size_t>(n), x);
    Integer fact = 1, qhx = 1;
    for (int i = 1; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) qhx *= lat.pairing(h, x);
    t.expect(lat.square(h) == 0, "h isotropic");
    t.expect(fujiki_product(lat, split) == lat.fujiki_constant() * Rational(fact * qhx),
             "h/x split, trial " + std::to_string(trial));
  }
}

void order_consistency(Tally& t) {
  for (const auto& c : kum_configs()) {
    if (!c.gcd_condition()) continue;
    const auto order = aut_rel(c).order();
    t.expect(order && *order == c.order() * c.order(), label(c) + ": |Aut_rel| = " + aut_rel(c).to_string());
    t.expect(order && check_order_is_c_squared(Rational(c.order()), *order), label(c) + ": c^2");
  }
  t.expect(quotient_bb(lattices::kum2(), Integer(9)).fujiki_constant() == Rational(1, 3), "c of quotient");
}

void section_counts(Tally& t) {
  const auto model = kummer_translation_model();
  const auto& a = *model.action;
  const auto g = model.group();
  for (std::size_t e = 1; e < g.order(); ++e)
    t.expect(a.fixed_points(e).size() == 27, "|Fix(" + g.label(e) + ")|");
  // <f'> acting on Fix(f): freely, 9 orbits
  const auto f = g.index_of({1, 0});
  const auto f2 = g.index_of({0, 1});
  const auto fix = a.fixed_points(f);
  std::vector<std::size_t> local(a.set_size(), SIZE_MAX);
  for (std::size_t i = 0; i < fix.size(); ++i) local[fix[i]] = i;
  std::vector<std::size_t> perm(fix.size());
  bool free_action = true;
  for (std::size_t i = 0; i < fix.size(); ++i) {
    perm[i] = local[a.act(f2, fix[i])];
    free_action = free_action && perm[i] != i && perm[i] != SIZE_MAX;
  }
  t.expect(free_action, "complementary action is free on Fix(f)");
  if (free_action) t.expect(oracle::union_find_orbits(fix.size(), {perm}) == 9, "9 orbits on Fix(f)");
  const auto inv = involution_orbit_count(2);
  t.expect(inv.involutions == 81 && inv.orbits == 9, "involutions " + std::to_string(inv.involutions) + ", orbits " +
                                                         std::to_string(inv.orbits));
  const auto types = symplectic_cyclic_local_types(3, 4);
  t.expect(types.size() == 1 && local_type_label(3, types.front()) == "1/3(1,1,2,2)", "local types");
  const auto sym = affine_fixed_points(IntMatrix::scalar(4, Integer(-1)), TorsionPoint::zero(4));
  t.expect(std::holds_alternative<Integer>(sym) && std::get<Integer>(sym) == 16, "fixed points of -1");
}

void euler_cross_check(Tally& t) {
  const auto model = kummer_translation_model();
  const auto e = orbifold_euler(model, Integer(108), Integer(9));
  const auto dual = betti_table(llv::dual_kum2_decomposition());
  t.expect(e == 36, "orbifold Euler " + e.get_str());
  t.expect(dual.euler == 36, "dual Euler " + dual.euler.get_str());
  const auto kum = betti_table(llv::kum2_decomposition());
  t.expect(kum.total == 140, "Kum2 total " + kum.total.get_str());
  t.expect(kum.betti.size() == 9 && kum.betti[4] == 108 && kum.betti[4] == 27 + 81, "Kum2 b4");
  const auto declared = singularity_report(kummer_declared_ledger());
  const auto computed = singularity_report(model);
  t.expect(declared.stepwise_count == Integer(18), "declared stepwise count");
  t.expect(computed.burnside_count == Integer(36), "model orbit count");
  t.expect(declared.discrepancy, "declared count flagged against the orbit count");
}

void property_suites(Tally& t) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_matrix(dim(rng), dim(rng), -20, 20, rng);
    const auto f = smith_normal_form(a);
    t.expect(f.U * a * f.V == f.D, "SNF reconstruction " + str(a));
    t.expect(abs(f.U.determinant()) == 1 && abs(f.V.determinant()) == 1, "SNF unimodular " + str(a));
  }
  int square = 0;
  while (square < 300) {
    const auto a = oracle::random_matrix(1 + square % 5, 1 + square % 5, -9, 9, rng);
    const Integer det = a.determinant();
    if (det == 0) continue;
    ++square;
    t.expect(cokernel(a).order() == abs(det), "coker order " + str(a));
  }
  const std::vector<std::vector<long>> shapes = {{2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 2}};
  for (int i = 0; i < 200; ++i) {
    const FiniteAbelianGroup g(shapes[static_cast<std::size_t>(i) % shapes.size()]);
    std::size_t size = 0;
    const auto perms = oracle::random_coset_action(g, 1 + static_cast<std::size_t>(i) % 6, rng, size);
    const auto action = GroupAction::from_generators(g, size, perms);
    std::size_t fixes = 0;
    for (std::size_t e = 0; e < g.order(); ++e) fixes += action.fixed_points(e).size();
    const auto orbits = oracle::union_find_orbits(size, perms);
    t.expect(fixes == orbits * g.order() && orbit_count(action).orbit_count == orbits, "Burnside");
  }
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int i = 0; i < 100;) {
    IntMatrix e(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c) {
        e(r, c) = entry(rng);
        e(c, r) = -e(r, c);
      }
    if (e.determinant() == 0) continue;
    ++i;
    const auto b = oracle::random_unimodular(4, 12, rng);
    t.expect(polarization_type(PolarizedTorus(b.transpose() * e * b)) == polarization_type(PolarizedTorus(e)),
             "type invariance " + str(e));
  }
  for (std::size_t r = 1; r <= 5; ++r)
    for (const bool type_d : {false, true}) {
      if (type_d && r < 2) continue;
      const int so_dim = static_cast<int>(2 * r + (type_d ? 0 : 1));
      for (const auto& d : oracle::dominant_doubled_weights(type_d, r, 6)) {
        const HighestWeight w(type_d ? Series::D : Series::B, d);
        t.expect(weyl_dim(w) == oracle::branching_dim(so_dim, d), "weyl_dim " + w.to_string());
      }
    }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "kernel of the dual polarization", 1.0, kernel_identity},
      {2, "Galois group of the minimal isogeny", 5.0, galois_group},
      {3, "M_phi M_psi = (n+1) I_8", 0, factorization},
      {4, "cup product with l equals the dual polarization", 0, cup_product},
      {5, "kernel_mod([[p,0],[-s,q]], pq) is cyclic", 0, a_lemma},
      {6, "Fujiki identities for n <= 5", 0, fujiki_identities},
      {7, "relative automorphisms have order c^2", 0, order_consistency},
      {8, "fixed-point, orbit and local-type counts", 2.0, section_counts},
      {9, "Euler cross-check and flagged singularity count", 2.0, euler_cross_check},
      {10, "property suites", 60.0, property_suites},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit <= 0 || secs < c.time_limit;
    const bool ok = error.empty() && t.failures == 0 && t.checks > 0 && in_time;
    all_ok = all_ok && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << t.checks << " checks, "
              << timing;
    if (c.time_limit > 0) std::cout << " / limit " << c.time_limit << "s";
    std::cout << ")";
    if (!error.empty()) std::cout << "  exception: " << error;
    if (t.failures) std::cout << "  " << t.failures << " failed: " << t.first.str();
    if (!in_time) std::cout << "  over time limit";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
