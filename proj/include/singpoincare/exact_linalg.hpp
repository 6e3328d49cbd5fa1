#pragma once

// Exact integer/rational arithmetic and small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singpoincare {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);

/// Dense row-major matrix. Entry access through at() is bounds-checked.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a.data_[i * a.cols_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.data_[i * c.cols_ + j] += aik * b.data_[k * b.cols_ + j];
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    check(i, 0);
    check(k, 0);
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[i * cols_ + j], data_[k * cols_ + j]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    check(0, j);
    check(0, k);
    for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + j], data_[i * cols_ + k]);
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Exact inverse. Throws MathError(SingularMatrix).
RatMatrix invert(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(RatMatrix m);

struct SmithForm {
  std::vector<Integer> diagonal;  // d_1 | d_2 | ... , length min(rows, cols)
  IntMatrix left;                 // rows x rows, unimodular
  IntMatrix right;                // cols x cols, unimodular
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// rows x cols matrix carrying `diagonal`.
  IntMatrix diagonal_matrix() const;
};

/// left * m * right == diag(diagonal), all invariant factors nonnegative.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace singpoincare
