#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "terracini/polynomial.hpp"
#include "terracini/rational.hpp"

namespace terracini {

/// Dense rectangular matrix.  All paper instances are small (at most a few
/// dozen columns), so density beats sparsity here.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("matrix rows have unequal lengths");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using FpMatrix = Matrix<PrimeField::Element>;
using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;
using PolyMatrix = Matrix<SparsePolynomial>;

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("vstack: column counts differ");
  std::size_t cols = a.rows() == 0 ? b.cols() : a.cols();
  Matrix<T> m(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

template <typename T>
Matrix<T> select_columns(const Matrix<T>& m, std::span<const int> cols) {
  Matrix<T> r(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    int c = cols[j];
    if (c < 0 || static_cast<std::size_t>(c) >= m.cols())
      throw std::invalid_argument("column index out of range");
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, j) = m(i, static_cast<std::size_t>(c));
  }
  return r;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

/// Row rank over F_p by Gaussian elimination; the input is copied.
std::size_t rank_mod_p(const FpMatrix& m, const PrimeField& field);

/// Exact rank over Q (fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix).
std::size_t rank_rational(const RationalMatrix& m);
std::size_t rank_integer(const IntMatrix& m);

/// Rank over the rational function field Q(x_1..x_k): fraction-free Bareiss
/// with exact polynomial division.  Equals the maximum of rank_mod_p over all
/// evaluation points outside a proper closed locus.
std::size_t rank_symbolic(const PolyMatrix& m);

}  // namespace terracini
