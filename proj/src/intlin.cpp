#include "hkdual/intlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hkdual {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |a(i,j)| with i, j >= t; ties broken by (row, col).
std::optional<Pivot> find_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& v = a(i, j);
      if (v == 0) continue;
      Integer av = abs(v);
      if (!best || av < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(av);
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntVector SmithForm::diagonal() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  IntVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = D(i, i);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  if (input.empty()) throw std::invalid_argument("smith_normal_form of an empty matrix");
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  bool exhausted = false;
  for (std::size_t t = 0; t < steps && !exhausted; ++t) {
    while (true) {
      auto pivot = find_pivot(a, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility into the remainder.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (!exhausted && a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

FinAbGroup::FinAbGroup(std::size_t free_rank, IntVector invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::cyclic_power(const Integer& m, std::size_t count) {
  if (m < 0) throw std::invalid_argument("cyclic order must be nonnegative");
  if (m == 0) return FinAbGroup(count, {});
  if (m == 1 || count == 0) return {};
  return FinAbGroup(0, IntVector(count, m));
}

FinAbGroup FinAbGroup::from_cyclic_orders(const IntVector& orders) {
  if (orders.empty()) return {};
  IntVector diag;
  diag.reserve(orders.size());
  for (const auto& o : orders) diag.push_back(abs(o));
  // Z^k / diag(c_i)·Z^k is exactly the requested sum.
  return cokernel(IntMatrix::diagonal(diag));
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer out(1);
  for (const auto& d : factors_) out *= d;
  return out;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  IntVector orders = factors_;
  orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
  orders.insert(orders.end(), free_rank_ + other.free_rank_, Integer(0));
  return from_cyclic_orders(orders);
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " ⊕ ";
    out += piece;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& d : factors_) append("Z/" + d.get_str());
  return out;
}

FinAbGroup cokernel(const IntMatrix& a) {
  if (a.cols() == 0) return FinAbGroup(a.rows(), {});
  if (a.rows() == 0) return {};
  const SmithForm snf = smith_normal_form(a);
  std::size_t free_rank = a.rows() - std::min(a.rows(), a.cols());
  IntVector factors;
  for (const auto& d : snf.diagonal()) {
    if (d == 0)
      ++free_rank;
    else if (d > 1)
      factors.push_back(d);
  }
  return FinAbGroup(free_rank, std::move(factors));
}

FinAbGroup kernel_mod(const IntMatrix& a, const Integer& m) {
  if (m < 2) throw std::invalid_argument("kernel_mod requires modulus >= 2");
  if (a.cols() == 0) return {};
  IntVector orders;
  if (a.rows() > 0) {
    const SmithForm snf = smith_normal_form(a);
    for (const auto& d : snf.diagonal()) orders.push_back(gcd(d, m));
  }
  // Columns beyond the diagonal are unconstrained.
  const std::size_t diag = a.rows() == 0 ? 0 : std::min(a.rows(), a.cols());
  for (std::size_t j = diag; j < a.cols(); ++j) orders.push_back(m);
  return FinAbGroup::from_cyclic_orders(orders);
}

Integer solve_affine_mod(const IntMatrix& a, const IntVector& b, const Integer& m) {
  if (m < 1) throw std::invalid_argument("solve_affine_mod requires modulus >= 1");
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  if (a.cols() == 0) {
    for (const auto& bi : b)
      if (mod_floor(bi, m) != 0) return Integer(0);
    return Integer(1);
  }
  if (a.rows() == 0) {
    Integer count(1);
    for (std::size_t j = 0; j < a.cols(); ++j) count *= m;
    return count;
  }
  // v ↦ V⁻¹v is a bijection of (Z/m)^cols, so A·v ≡ b  ⇔  D·w ≡ U·b.
  const SmithForm snf = smith_normal_form(a);
  const IntVector c = snf.U * b;
  const IntVector diag = snf.diagonal();
  Integer count(1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < diag.size()) {
      Integer g = gcd(diag[i], m);
      if (!mpz_divisible_p(c[i].get_mpz_t(), g.get_mpz_t())) return Integer(0);
      count *= g;
    } else if (mod_floor(c[i], m) != 0) {
      return Integer(0);
    }
  }
  for (std::size_t j = diag.size(); j < a.cols(); ++j) count *= m;
  return count;
}

}  // namespace hkdual
