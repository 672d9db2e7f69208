#pragma once

#include <cstdint>
#include <vector>

#include "hkdual/int_matrix.hpp"
#include "hkdual/intlin.hpp"

namespace hkdual {

/// Data (n, d1, d2, s) of a moduli construction of a generalized Kummer
/// variety of dimension 2n over an abelian surface polarized of type (d1, d2).
struct ModuliConfig {
  long n = 2;
  long d1 = 1;
  long d2 = 3;
  long s = 1;

  /// Throws std::invalid_argument unless n >= 1, 0 < d1 | d2, d1·d2 = n+1, s ≠ 0.
  void validate() const;
  /// gcd(d1, s) = 1. Groups are still computed when this fails.
  bool gcd_condition() const;
  long order() const { return n + 1; }
};

/// Every config with n+1 <= max_order and s in [s_min, s_max] \ {0}.
std::vector<ModuliConfig> enumerate_configs(long max_order, long s_min, long s_max);

/// φ for the standard polarization of type (d1, d2).
IntMatrix phi_matrix(long d1, long d2);
/// φ̌ = (d1 d2)·φ⁻¹.
IntMatrix dual_phi_matrix(long d1, long d2);

/// [[φ, 0], [-s·I, φ̌]] acting on (x, ξ) ∈ (Z/(n+1))^8.
IntMatrix translation_condition_matrix(const ModuliConfig& cfg);

/// K = {(x, ξ) : φx ≡ 0, φ̌ξ ≡ s·x mod n+1}.
FinAbGroup translation_subgroup(const ModuliConfig& cfg);

/// Automorphisms acting trivially on H^2 and preserving the fibration: ker φ̌.
FinAbGroup aut_rel(const ModuliConfig& cfg);

/// M_φ = [[s·I, -φ̌], [φ, 0]], (y, λ) ↦ (s·y - φ̌λ, φ(y)).
IntMatrix minimal_isogeny_matrix(const ModuliConfig& cfg);
/// M_ψ = [[0, φ̌], [-φ, s·I]], (y, λ) ↦ (φ̌λ, s·λ - φ(y)).
IntMatrix complementary_isogeny_matrix(const ModuliConfig& cfg);

/// M_φ · psi == (n+1)·I_8.
bool verify_factorization(const ModuliConfig& cfg, const IntMatrix& psi);
bool verify_factorization(const ModuliConfig& cfg);

/// Element (ε, x, ξ) of Z/2 ⋉ K; the sign acts on (x, ξ) by negation.
struct SemidirectElement {
  int epsilon = 1;
  std::vector<std::int64_t> x;   // 4 entries mod n+1
  std::vector<std::int64_t> xi;  // 4 entries mod n+1

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

bool in_translation_subgroup(const ModuliConfig& cfg, const SemidirectElement& e);
SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b, long modulus);
SemidirectElement inverse(const SemidirectElement& a, long modulus);

/// Explicit elements (x, ξ) of K, lexicographic. Enumerates (n+1)^8 candidates.
std::vector<SemidirectElement> translation_elements(const ModuliConfig& cfg);
/// Explicit elements (0, ξ) with φ̌ξ ≡ 0, the relative automorphisms inside K.
std::vector<SemidirectElement> relative_elements(const ModuliConfig& cfg);

struct InvolutionOrbits {
  std::size_t involutions = 0;
  std::size_t orbits = 0;
  std::vector<std::size_t> orbit_sizes;  // sorted
};

/// Conjugation orbits of {(-1, v) : v ∈ translations} under {(1, u) : u ∈ acting}.
InvolutionOrbits involution_orbits(const std::vector<SemidirectElement>& translations,
                                   const std::vector<SemidirectElement>& acting, long modulus);

/// Default model (d1, d2) = (1, n+1), s = 1, acting subgroup = relative elements.
InvolutionOrbits involution_orbit_count(long n);

}  // namespace hkdual
