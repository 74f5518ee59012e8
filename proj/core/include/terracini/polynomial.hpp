#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/rational.hpp"

namespace terracini {

/// Sparse multivariate polynomial over Q.  Terms map exponent vectors
/// (length = variable count) to nonzero coefficients; the map's lexicographic
/// key order doubles as the monomial order used for exact division.
class SparsePolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  SparsePolynomial() : nvars_(0) {}
  explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

  static SparsePolynomial constant(int nvars, const Rational& c);
  static SparsePolynomial variable(int nvars, int index);
  static SparsePolynomial monomial(int nvars, Exponents exps, const Rational& c);

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& exps, const Rational& c);

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  SparsePolynomial scaled(const Rational& c) const;
  bool operator==(const SparsePolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Formal partial derivative with respect to one variable.
  SparsePolynomial partial(int var) const;

  PrimeField::Element eval_mod_p(std::span<const PrimeField::Element> point,
                                 const PrimeField& field) const;

  /// Same polynomial viewed in a larger variable set, variable i becoming
  /// variable i + offset.  Used to give join summands disjoint parameters.
  SparsePolynomial reindexed(int new_nvars, int offset) const;

  std::string to_string(std::span<const std::string> var_names) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Exact quotient f / g in Q[x]; throws if the division is not exact.
SparsePolynomial divide_exact(const SparsePolynomial& f, const SparsePolynomial& g);

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// Parses "expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' uint)?; base := uint | ident | '(' expr ')'" with the
/// declared variable names.  Whitespace is insignificant.
SparsePolynomial parse_poly(const std::string& text, std::span<const std::string> vars);

}  // namespace terracini
