#include "hkdual/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkdual {

namespace {

// Sorts in place by bubble sort and returns the permutation sign, or 0 on a
// repeated index.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

const char* subscript_digit(int d) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return digits[d];
}

}  // namespace

ExtClass ExtClass::basis(int g, std::vector<int> indices, const Integer& coefficient) {
  for (int i : indices)
    if (i < 0 || i >= 2 * g) throw std::invalid_argument("exterior index out of range");
  ExtClass out(g);
  const int sign = sort_with_sign(indices);
  if (sign != 0) out.add_term(indices, coefficient * sign);
  return out;
}

void ExtClass::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::optional<int> ExtClass::degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = static_cast<int>(m.size());
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Integer ExtClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer ExtClass::top_coefficient() const {
  Monomial top(static_cast<std::size_t>(2 * g_));
  for (int i = 0; i < 2 * g_; ++i) top[static_cast<std::size_t>(i)] = i;
  return coefficient(top);
}

ExtClass& ExtClass::operator+=(const ExtClass& other) {
  if (other.g_ != g_) throw std::invalid_argument("exterior classes of different rank");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ExtClass& ExtClass::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

std::string ExtClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1 || m.empty()) out += mag.get_str();
    if (m.empty()) continue;
    out += "e";
    for (int i : m) {
      const int label = i + 1;
      if (label >= 10) out += subscript_digit(label / 10);
      out += subscript_digit(label % 10);
    }
  }
  return out;
}

ExtClass wedge(const ExtClass& a, const ExtClass& b) {
  if (a.g() != b.g()) throw std::invalid_argument("wedge of classes of different rank");
  ExtClass out(a.g());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> joined = ma;
      joined.insert(joined.end(), mb.begin(), mb.end());
      out += ExtClass::basis(a.g(), joined, ca * cb);
    }
  return out;
}

ExtClass ample_class(long d1, long d2) {
  if (d1 <= 0 || d2 <= 0 || d2 % d1 != 0)
    throw std::invalid_argument("ample_class needs 0 < d1 | d2");
  return ExtClass::basis(2, {0, 2}, d1) + ExtClass::basis(2, {1, 3}, d2);
}

std::vector<ExtClass> poincare_dual_basis() {
  return {ExtClass::basis(2, {1, 2, 3}), ExtClass::basis(2, {0, 2, 3}, -1),
          ExtClass::basis(2, {0, 1, 3}), ExtClass::basis(2, {0, 1, 2}, -1)};
}

IntMatrix cup_with_l_matrix(const ExtClass& l) {
  if (l.g() != 2) throw std::invalid_argument("cup_with_l_matrix is defined for g = 2");
  if (!l.is_zero() && l.degree() != 2)
    throw std::invalid_argument("cup_with_l_matrix needs a degree-2 class");
  const auto target = poincare_dual_basis();
  IntMatrix out(4, 4);
  for (int j = 0; j < 4; ++j) {
    const ExtClass image = wedge(l, ExtClass::basis(2, {j}));
    // Each target basis element is ±(a single monomial).
    ExtClass rest = image;
    for (std::size_t i = 0; i < target.size(); ++i) {
      const auto& [mono, sign] = *target[i].terms().begin();
      const Integer coeff = image.coefficient(mono) * sign;
      out(i, static_cast<std::size_t>(j)) = coeff;
      rest = rest - target[i] * coeff;
    }
    if (!rest.is_zero()) throw std::logic_error("cup product left the degree-3 part");
  }
  return out;
}

IntMatrix poincare_pairing_matrix() {
  const auto dual = poincare_dual_basis();
  IntMatrix out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < dual.size(); ++j)
      out(static_cast<std::size_t>(i), j) = wedge(ExtClass::basis(2, {i}), dual[j]).top_coefficient();
  return out;
}

Integer self_intersection(const ExtClass& l) {
  if (l.g() != 2) throw std::invalid_argument("self_intersection is defined for g = 2");
  // e_1∧e_3∧e_2∧e_4 = -e_1∧e_2∧e_3∧e_4.
  return -wedge(l, l).top_coefficient();
}

}  // namespace hkdual
