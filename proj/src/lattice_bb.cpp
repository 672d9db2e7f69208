#include "hkdual/lattice_bb.hpp"

#include <stdexcept>
#include <utility>

namespace hkdual {

BBLattice::BBLattice(IntMatrix gram, Rational fujiki, int half_dim, std::string name)
    : gram_(std::move(gram)), fujiki_(std::move(fujiki)), half_dim_(half_dim),
      name_(std::move(name)) {
  fujiki_.canonicalize();
  if (gram_.empty() || !gram_.is_symmetric())
    throw std::invalid_argument("BB lattice gram matrix must be nonempty and symmetric");
  if (gram_.determinant() == 0) throw std::invalid_argument("BB lattice form is degenerate");
  if (fujiki_ <= 0) throw std::invalid_argument("Fujiki constant must be positive");
  if (half_dim_ < 1) throw std::invalid_argument("half dimension must be >= 1");
}

Integer BBLattice::pairing(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("vector length does not match lattice rank");
  const IntVector gy = gram_ * y;
  Integer out(0);
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * gy[i];
  return out;
}

IntVector BBLattice::basis_vector(std::size_t i) const {
  IntVector v(rank(), Integer(0));
  v.at(i) = 1;
  return v;
}

namespace lattices {

IntMatrix hyperbolic_plane() { return IntMatrix{{0, 1}, {1, 0}}; }

IntMatrix rank_one(long k) { return IntMatrix{{k}}; }

IntMatrix direct_sum(std::span<const IntMatrix> parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rows();
  IntMatrix out(n, n);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    if (!p.is_square()) throw std::invalid_argument("direct_sum of non-square block");
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out(offset + i, offset + j) = p(i, j);
    offset += p.rows();
  }
  return out;
}

BBLattice kum2() {
  const std::vector<IntMatrix> parts{hyperbolic_plane(), hyperbolic_plane(), hyperbolic_plane(),
                                     rank_one(-6)};
  return BBLattice(direct_sum(parts), Rational(3), 2, "kum2");
}

}  // namespace lattices

Integer divisibility(const BBLattice& lattice, const IntVector& x) {
  if (x.size() != lattice.rank())
    throw std::invalid_argument("vector length does not match lattice rank");
  const IntVector gx = lattice.gram() * x;
  Integer g(0);
  for (const auto& v : gx) g = gcd(g, v);
  if (g == 0) throw std::invalid_argument("divisibility of the zero vector is undefined");
  return g;
}

Rational fujiki_product(const BBLattice& lattice, std::span<const IntVector> xs,
                        kernels::Exec exec) {
  const std::size_t arity = 2 * static_cast<std::size_t>(lattice.half_dim());
  if (xs.size() != arity)
    throw std::invalid_argument("fujiki_product needs exactly 2n vectors (2n = " +
                                std::to_string(arity) + ")");
  if (lattice.half_dim() > kMaxFujikiHalfDim)
    throw std::invalid_argument("fujiki_product enumeration capped at n = 6");
  IntMatrix table(arity, arity);
  for (std::size_t i = 0; i < arity; ++i)
    for (std::size_t j = i + 1; j < arity; ++j) {
      table(i, j) = lattice.pairing(xs[i], xs[j]);
      table(j, i) = table(i, j);
    }
  Rational out(kernels::matching_sum(table, exec));
  out *= lattice.fujiki_constant();
  out.canonicalize();
  return out;
}

Rational fujiki_closed_form(const BBLattice& lattice, const IntVector& x) {
  const auto n = static_cast<unsigned long>(lattice.half_dim());
  Integer two_n_fact, n_fact, q_pow;
  mpz_fac_ui(two_n_fact.get_mpz_t(), 2 * n);
  mpz_fac_ui(n_fact.get_mpz_t(), n);
  const Integer q = lattice.square(x);
  mpz_pow_ui(q_pow.get_mpz_t(), q.get_mpz_t(), n);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
  Rational out(two_n_fact, two_pow * n_fact);
  out.canonicalize();
  out *= lattice.fujiki_constant();
  out *= Rational(q_pow);
  out.canonicalize();
  return out;
}

BBLattice quotient_bb(const BBLattice& lattice, const Integer& group_order) {
  if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
  Rational c = lattice.fujiki_constant() / Rational(group_order);
  c.canonicalize();
  return BBLattice(lattice.gram(), c, lattice.half_dim(),
                   lattice.name().empty() ? std::string{} : lattice.name() + "/G");
}

bool check_order_is_c_squared(const Rational& c, const Integer& group_order) {
  Rational sq = c * c;
  sq.canonicalize();
  return sq == Rational(group_order);
}

}  // namespace hkdual
