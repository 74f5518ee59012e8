#include "terracini/matrix.hpp"

#include <algorithm>

namespace terracini {

std::size_t rank_mod_p(const FpMatrix& m, const PrimeField& field) {
  FpMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    PrimeField::Element inv = field.inv(a(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      PrimeField::Element f = field.mul(a(i, c), inv);
      a(i, c) = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
    }
    ++r;
  }
  return r;
}

// One-step fraction-free elimination (Bareiss).  Intermediate entries are
// minors of the input, so every division below is exact.
std::size_t rank_integer(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  Int denom = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
      }
      a(i, c) = 0;
    }
    denom = a(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_rational(const RationalMatrix& m) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * Rational(l);
      a(i, j) = v.get_num();
    }
  }
  return rank_integer(a);
}

std::size_t rank_symbolic(const PolyMatrix& m) {
  PolyMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return 0;
  const int nvars = a(0, 0).variable_count();
  SparsePolynomial denom = SparsePolynomial::constant(nvars, Rational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        SparsePolynomial t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = t.is_zero() ? SparsePolynomial(nvars) : divide_exact(t, denom);
      }
      a(i, c) = SparsePolynomial(nvars);
    }
    denom = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace terracini
