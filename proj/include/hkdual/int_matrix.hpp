#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hkdual {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& value);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& factor);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& k) { return a *= k; }
  friend IntMatrix operator*(const Integer& k, IntMatrix a) { return a *= k; }
  friend IntMatrix operator-(IntMatrix a) { return a *= Integer(-1); }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// [[a, b], [c, d]] assembled from four blocks with compatible shapes.
IntMatrix block_matrix(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                       const IntMatrix& d);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

/// Parses "[[1,2],[3,4]]" (whitespace tolerant). Throws std::invalid_argument.
IntMatrix parse_matrix_literal(const std::string& text);
/// Parses one row per line, whitespace-separated integers; blank lines and
/// lines starting with '#' are skipped. Throws std::invalid_argument.
IntMatrix parse_matrix_text(const std::string& text);

/// Mathematical (nonnegative) residue.
Integer mod_floor(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace hkdual
