#include "hkdual/kummer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hkdual/kernels.hpp"
#include "hkdual/torus.hpp"

namespace hkdual {

namespace {

std::int64_t reduce(std::int64_t v, long m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> concat(const SemidirectElement& e) {
  std::vector<std::int64_t> out = e.x;
  out.insert(out.end(), e.xi.begin(), e.xi.end());
  return out;
}

SemidirectElement split(int epsilon, const std::vector<std::int64_t>& v) {
  return SemidirectElement{epsilon, {v.begin(), v.begin() + 4}, {v.begin() + 4, v.end()}};
}

}  // namespace

void ModuliConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d1 <= 0 || d2 <= 0 || d2 % d1 != 0)
    throw std::invalid_argument("polarization type needs 0 < d1 | d2");
  if (d1 * d2 != n + 1) throw std::invalid_argument("polarization type must satisfy d1·d2 = n+1");
  if (s == 0) throw std::invalid_argument("s must be nonzero");
}

bool ModuliConfig::gcd_condition() const { return std::gcd(d1, s) == 1; }

std::vector<ModuliConfig> enumerate_configs(long max_order, long s_min, long s_max) {
  std::vector<ModuliConfig> out;
  for (long order = 2; order <= max_order; ++order)
    for (long d1 = 1; d1 * d1 <= order; ++d1) {
      if (order % d1 != 0) continue;
      const long d2 = order / d1;
      if (d2 % d1 != 0) continue;
      for (long s = s_min; s <= s_max; ++s)
        if (s != 0) out.push_back(ModuliConfig{order - 1, d1, d2, s});
    }
  return out;
}

IntMatrix phi_matrix(long d1, long d2) {
  return polarization_isogeny(PolarizedTorus::standard(d1, d2)).matrix;
}

IntMatrix dual_phi_matrix(long d1, long d2) {
  return dual_polarization(TorusHom{phi_matrix(d1, d2)}, Integer(d1) * d2).matrix;
}

IntMatrix translation_condition_matrix(const ModuliConfig& cfg) {
  cfg.validate();
  return block_matrix(phi_matrix(cfg.d1, cfg.d2), IntMatrix(4, 4),
                      IntMatrix::scalar(4, Integer(-cfg.s)), dual_phi_matrix(cfg.d1, cfg.d2));
}

FinAbGroup translation_subgroup(const ModuliConfig& cfg) {
  return kernel_mod(translation_condition_matrix(cfg), Integer(cfg.order()));
}

FinAbGroup aut_rel(const ModuliConfig& cfg) {
  cfg.validate();
  return isogeny_kernel(TorusHom{dual_phi_matrix(cfg.d1, cfg.d2)});
}

IntMatrix minimal_isogeny_matrix(const ModuliConfig& cfg) {
  cfg.validate();
  return block_matrix(IntMatrix::scalar(4, Integer(cfg.s)), -dual_phi_matrix(cfg.d1, cfg.d2),
                      phi_matrix(cfg.d1, cfg.d2), IntMatrix(4, 4));
}

IntMatrix complementary_isogeny_matrix(const ModuliConfig& cfg) {
  cfg.validate();
  return block_matrix(IntMatrix(4, 4), dual_phi_matrix(cfg.d1, cfg.d2),
                      -phi_matrix(cfg.d1, cfg.d2), IntMatrix::scalar(4, Integer(cfg.s)));
}

bool verify_factorization(const ModuliConfig& cfg, const IntMatrix& psi) {
  return minimal_isogeny_matrix(cfg) * psi == IntMatrix::scalar(8, Integer(cfg.order()));
}

bool verify_factorization(const ModuliConfig& cfg) {
  return verify_factorization(cfg, complementary_isogeny_matrix(cfg));
}

bool in_translation_subgroup(const ModuliConfig& cfg, const SemidirectElement& e) {
  if (e.x.size() != 4 || e.xi.size() != 4) return false;
  const IntMatrix cond = translation_condition_matrix(cfg);
  IntVector v;
  for (auto c : concat(e)) v.emplace_back(static_cast<long>(c));
  const Integer m(cfg.order());
  for (const auto& r : cond * v)
    if (mod_floor(r, m) != 0) return false;
  return true;
}

SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b, long modulus) {
  // (ε, v)(ε', v') = (εε', v + ε·v')
  SemidirectElement out{a.epsilon * b.epsilon, a.x, a.xi};
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] = reduce(a.x[i] + a.epsilon * b.x[i], modulus);
    out.xi[i] = reduce(a.xi[i] + a.epsilon * b.xi[i], modulus);
  }
  return out;
}

SemidirectElement inverse(const SemidirectElement& a, long modulus) {
  // (1, v)⁻¹ = (1, -v); (-1, v)⁻¹ = (-1, v).
  if (a.epsilon == -1) return a;
  SemidirectElement out = a;
  for (auto& c : out.x) c = reduce(-c, modulus);
  for (auto& c : out.xi) c = reduce(-c, modulus);
  return out;
}

std::vector<SemidirectElement> translation_elements(const ModuliConfig& cfg) {
  const auto sys = kernels::ModSystem::make(translation_condition_matrix(cfg),
                                            IntVector(8, Integer(0)), Integer(cfg.order()));
  std::vector<SemidirectElement> out;
  for (const auto& v : kernels::list_box_solutions(sys, cfg.order(), kernels::Exec::parallel))
    out.push_back(split(1, v));
  return out;
}

std::vector<SemidirectElement> relative_elements(const ModuliConfig& cfg) {
  cfg.validate();
  const auto sys = kernels::ModSystem::make(dual_phi_matrix(cfg.d1, cfg.d2), IntVector(4, Integer(0)),
                                            Integer(cfg.order()));
  std::vector<SemidirectElement> out;
  for (const auto& xi : kernels::list_box_solutions(sys, cfg.order(), kernels::Exec::serial))
    out.push_back(SemidirectElement{1, std::vector<std::int64_t>(4, 0), xi});
  return out;
}

InvolutionOrbits involution_orbits(const std::vector<SemidirectElement>& translations,
                                   const std::vector<SemidirectElement>& acting, long modulus) {
  std::set<std::vector<std::int64_t>> unseen;
  for (const auto& t : translations) unseen.insert(concat(t));
  InvolutionOrbits out;
  out.involutions = unseen.size();
  while (!unseen.empty()) {
    const SemidirectElement inv = split(-1, *unseen.begin());
    if (multiply(inv, inv, modulus) != SemidirectElement{1, std::vector<std::int64_t>(4, 0),
                                                          std::vector<std::int64_t>(4, 0)})
      throw std::logic_error("(-1, v) failed to square to the identity");
    std::set<std::vector<std::int64_t>> orbit;
    for (const auto& u : acting) {
      const SemidirectElement conj = multiply(multiply(u, inv, modulus), inverse(u, modulus), modulus);
      orbit.insert(concat(conj));
    }
    for (const auto& v : orbit)
      if (unseen.erase(v) == 0) throw std::logic_error("conjugation left the involution set");
    out.orbit_sizes.push_back(orbit.size());
    ++out.orbits;
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  return out;
}

InvolutionOrbits involution_orbit_count(long n) {
  const ModuliConfig cfg{n, 1, n + 1, 1};
  cfg.validate();
  return involution_orbits(translation_elements(cfg), relative_elements(cfg), cfg.order());
}

}  // namespace hkdual
