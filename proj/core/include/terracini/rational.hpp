#pragma once

#include <gmpxx.h>

#include <string>

#include "terracini/prime_field.hpp"

namespace terracini {

// Exact scalars.  mpq_class keeps values in lowest terms with a positive
// denominator, which is exactly the contract we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

/// Image of an integer in F_p.
inline PrimeField::Element reduce_mod_p(const Int& v, const PrimeField& f) {
  Int m(static_cast<unsigned long>(f.modulus()));
  Int r = v % m;
  if (r < 0) r += m;
  return static_cast<PrimeField::Element>(r.get_ui());
}

/// Image of a rational in F_p; throws if the denominator vanishes mod p.
inline PrimeField::Element reduce_mod_p(const Rational& v, const PrimeField& f) {
  PrimeField::Element num = reduce_mod_p(v.get_num(), f);
  PrimeField::Element den = reduce_mod_p(v.get_den(), f);
  if (den == 0) throw std::invalid_argument("rational has zero denominator mod p");
  return f.mul(num, f.inv(den));
}

}  // namespace terracini
