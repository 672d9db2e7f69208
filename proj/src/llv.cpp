#include "hkdual/llv.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hkdual {

HighestWeight::HighestWeight(Series series, std::vector<long> doubled)
    : series_(series), doubled_(std::move(doubled)) {
  const std::size_t r = doubled_.size();
  if (r == 0) throw std::invalid_argument("highest weight needs rank >= 1");
  if (series_ == Series::D && r < 2) throw std::invalid_argument("series D needs rank >= 2");
  const long parity = std::labs(doubled_[0]) % 2;
  for (long v : doubled_)
    if (std::labs(v) % 2 != parity)
      throw std::invalid_argument("weight mixes integer and half-integer entries");
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const long next = (series_ == Series::D && i + 2 == r) ? std::labs(doubled_[i + 1]) : doubled_[i + 1];
    if (doubled_[i] < next) throw std::invalid_argument("weight is not dominant");
  }
  if (series_ == Series::B && doubled_[r - 1] < 0) throw std::invalid_argument("weight is not dominant");
}

HighestWeight HighestWeight::integral(Series series, std::vector<long> weight) {
  for (auto& v : weight) v *= 2;
  return HighestWeight(series, std::move(weight));
}

namespace {

std::pair<Series, std::size_t> classify(int so_dim) {
  if (so_dim < 3) throw std::invalid_argument("so(n) needs n >= 3");
  if (so_dim % 2 == 1) return {Series::B, static_cast<std::size_t>((so_dim - 1) / 2)};
  if (so_dim < 4) throw std::invalid_argument("so(2) is abelian");
  return {Series::D, static_cast<std::size_t>(so_dim / 2)};
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

HighestWeight HighestWeight::symmetric_power(int so_dim, long k) {
  auto [series, rank] = classify(so_dim);
  std::vector<long> w(rank, 0);
  w[0] = 2 * k;
  return HighestWeight(series, std::move(w));
}

HighestWeight HighestWeight::spin(int so_dim) {
  auto [series, rank] = classify(so_dim);
  return HighestWeight(series, std::vector<long>(rank, 1));
}

int HighestWeight::so_dim() const {
  const int r = static_cast<int>(rank());
  return series_ == Series::B ? 2 * r + 1 : 2 * r;
}

std::string HighestWeight::to_string() const {
  std::string out = "so(" + std::to_string(so_dim()) + ") (";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ",";
    const long v = doubled_[i];
    out += v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2";
  }
  return out + ")";
}

Integer weyl_dim(const HighestWeight& w) {
  const std::size_t r = w.rank();
  // Doubled ρ: B_r has ρ_i = r - i + 1/2, D_r has ρ_i = r - i (1-based i).
  std::vector<long> rho(r), shifted(r);
  for (std::size_t i = 0; i < r; ++i) {
    const long base = static_cast<long>(r - 1 - i);
    rho[i] = w.series() == Series::B ? 2 * base + 1 : 2 * base;
    shifted[i] = w.doubled()[i] + rho[i];
  }
  Integer num(1), den(1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      num *= shifted[i] - shifted[j];
      num *= shifted[i] + shifted[j];
      den *= rho[i] - rho[j];
      den *= rho[i] + rho[j];
    }
    if (w.series() == Series::B) {
      num *= shifted[i];
      den *= rho[i];
    }
  }
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  return num / den;
}

Integer GradedDims::total() const {
  Integer out(0);
  for (const auto& [deg, d] : dims) out += d;
  return out;
}

bool GradedDims::symmetric_about(int middle_degree) const {
  for (const auto& [deg, d] : dims) {
    auto it = dims.find(2 * middle_degree - deg);
    const Integer mirror = it == dims.end() ? Integer(0) : it->second;
    if (mirror != d) return false;
  }
  return true;
}

GradedDims verbitsky_profile(long b2, long n) {
  if (b2 < 1 || n < 1) throw std::invalid_argument("verbitsky_profile needs b2 >= 1 and n >= 1");
  GradedDims out;
  if (n == 2) {
    const Integer total = weyl_dim(HighestWeight::symmetric_power(static_cast<int>(b2 + 2), 2));
    out.dims = {{0, 1}, {2, b2}, {4, total - 2 - 2 * b2}, {6, b2}, {8, 1}};
    return out;
  }
  for (long k = 0; k <= n; ++k) {
    const Integer d = binomial(b2 + k - 1, k);
    out.dims[static_cast<int>(2 * k)] = d;
    out.dims[static_cast<int>(4 * n - 2 * k)] = d;
  }
  return out;
}

BettiTable betti_table(const std::vector<LLVSummand>& decomposition) {
  BettiTable out;
  for (const auto& s : decomposition) {
    if (s.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    const Integer dim = s.weight ? weyl_dim(*s.weight) : Integer(1);
    Integer placed(0);
    for (const auto& [deg, d] : s.placement) {
      if (deg < 0 || d < 0) throw std::invalid_argument("invalid degree placement");
      placed += d;
    }
    if (placed != dim)
      throw std::invalid_argument("placement of " + (s.label.empty() ? std::string("summand") : s.label) +
                                  " adds up to " + placed.get_str() + ", module has dimension " +
                                  dim.get_str());
    for (const auto& [deg, d] : s.placement) {
      const auto idx = static_cast<std::size_t>(deg);
      if (out.betti.size() <= idx) out.betti.resize(idx + 1, Integer(0));
      out.betti[idx] += d * s.multiplicity;
    }
  }
  out.total = 0;
  out.euler = 0;
  for (std::size_t k = 0; k < out.betti.size(); ++k) {
    out.total += out.betti[k];
    if (k % 2 == 0)
      out.euler += out.betti[k];
    else
      out.euler -= out.betti[k];
  }
  return out;
}

namespace llv {

LLVSummand verbitsky_summand(long b2) {
  LLVSummand s;
  s.weight = HighestWeight::symmetric_power(static_cast<int>(b2 + 2), 2);
  s.placement = verbitsky_profile(b2, 2).dims;
  s.label = "V_(2)";
  return s;
}

LLVSummand trivial_summand(long count, int degree) {
  LLVSummand s;
  s.multiplicity = count;
  s.placement = {{degree, 1}};
  s.label = std::to_string(count) + "Q";
  return s;
}

LLVSummand spin_summand(int so_dim, int low_degree, int high_degree) {
  LLVSummand s;
  s.weight = HighestWeight::spin(so_dim);
  const Integer dim = weyl_dim(*s.weight);
  if (dim % 2 != 0) throw std::invalid_argument("spin module cannot be split evenly");
  s.placement = {{low_degree, dim / 2}, {high_degree, dim / 2}};
  s.label = "V_(1/2,...,1/2)";
  return s;
}

std::vector<LLVSummand> kum2_decomposition() {
  return {verbitsky_summand(7), trivial_summand(80, 4), spin_summand(9, 3, 5)};
}

std::vector<LLVSummand> dual_kum2_decomposition() {
  return {verbitsky_summand(7), trivial_summand(8, 4), spin_summand(9, 3, 5)};
}

}  // namespace llv

}  // namespace hkdual
