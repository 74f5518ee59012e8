#include "terracini/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace terracini {

SparsePolynomial SparsePolynomial::constant(int nvars, const Rational& c) {
  SparsePolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  SparsePolynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

SparsePolynomial SparsePolynomial::monomial(int nvars, Exponents exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
  SparsePolynomial p(nvars);
  p.add_term(exps, c);
  return p;
}

std::optional<int> SparsePolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

void SparsePolynomial::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
  SparsePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
  SparsePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
  SparsePolynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePolynomial SparsePolynomial::partial(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("partial: variable index out of range");
  SparsePolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

PrimeField::Element SparsePolynomial::eval_mod_p(std::span<const PrimeField::Element> point,
                                                 const PrimeField& field) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: point length mismatch");
  PrimeField::Element acc = 0;
  for (const auto& [e, c] : terms_) {
    PrimeField::Element t = reduce_mod_p(c, field);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] != 0) t = field.mul(t, field.pow(point[k], static_cast<std::uint64_t>(e[k])));
    }
    acc = field.add(acc, t);
  }
  return acc;
}

SparsePolynomial SparsePolynomial::reindexed(int new_nvars, int offset) const {
  if (offset < 0 || offset + nvars_ > new_nvars) throw std::invalid_argument("reindex out of range");
  SparsePolynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents d(new_nvars, 0);
    std::copy(e.begin(), e.end(), d.begin() + offset);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::string SparsePolynomial::to_string(std::span<const std::string> var_names) const {
  if (static_cast<int>(var_names.size()) != nvars_) throw std::invalid_argument("to_string: name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic order reads naturally (leading term first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
    bool coeff_printed = false;
    if (!has_vars || a != 1) {
      out << terracini::to_string(a);
      coeff_printed = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (coeff_printed) out << "*";
      coeff_printed = true;
      out << var_names[k];
      if (e[k] > 1) out << "^" << e[k];
    }
  }
  return out.str();
}

SparsePolynomial divide_exact(const SparsePolynomial& f, const SparsePolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("exact division by zero polynomial");
  if (f.variable_count() != g.variable_count())
    throw std::invalid_argument("polynomial variable counts differ");
  const int n = f.variable_count();
  SparsePolynomial q(n);
  SparsePolynomial r = f;
  const auto& glead = *g.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    SparsePolynomial::Exponents e(n);
    for (int k = 0; k < n; ++k) {
      e[k] = rlead.first[k] - glead.first[k];
      if (e[k] < 0) throw std::invalid_argument("polynomial division is not exact");
    }
    Rational c = rlead.second / glead.second;
    SparsePolynomial t = SparsePolynomial::monomial(n, e, c);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  SparsePolynomial run() {
    SparsePolynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

 private:
  SparsePolynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    SparsePolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        SparsePolynomial t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  SparsePolynomial term() {
    SparsePolynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  SparsePolynomial factor() {
    SparsePolynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(at, "expected exponent");
      long e = read_uint();
      SparsePolynomial acc = SparsePolynomial::constant(nvars(), Rational(1));
      for (long i = 0; i < e; ++i) acc = acc * b;
      return acc;
    }
    return b;
  }

  SparsePolynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePolynomial p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = read_uint();
      return SparsePolynomial::constant(nvars(), Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = read_ident();
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return SparsePolynomial::variable(nvars(), static_cast<int>(i));
      }
      throw ParseError(at, "unknown identifier '" + name + "'");
    }
    throw ParseError(pos_, c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long read_uint() {
    std::size_t at = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000L) throw ParseError(at, "integer literal too large");
      ++pos_;
    }
    return v;
  }

  std::string read_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return text_.substr(start, pos_ - start);
  }

  const std::string& text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_poly(const std::string& text, std::span<const std::string> vars) {
  return Parser(text, vars).run();
}

}  // namespace terracini
