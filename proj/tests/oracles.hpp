// Independent brute-force oracles for the property suites.  These stay
// deliberately naive: they share no code with the algorithms they check.
#pragma once

#include <span>
#include <vector>

#include "terracini/matroid.hpp"
#include "terracini/matroid_union.hpp"
#include "terracini/polynomial.hpp"
#include "terracini/rng.hpp"

namespace oracles {

using namespace terracini;

/// Can T be split into s parts, part i independent in ms[i]?  Tries every
/// coloring.
inline bool brute_partitionable(std::span<const Matroid> ms, Mask t) {
  std::vector<int> elems = indices_of(t);
  const int k = static_cast<int>(elems.size());
  const int s = static_cast<int>(ms.size());
  std::vector<int> color(k, 0);
  for (;;) {
    std::vector<Mask> parts(s, 0);
    for (int i = 0; i < k; ++i) parts[color[i]] |= bit(elems[i]);
    bool ok = true;
    for (int i = 0; i < s && ok; ++i) ok = ms[i].is_independent(parts[i]);
    if (ok) return true;
    int i = 0;
    while (i < k && ++color[i] == s) color[i++] = 0;
    if (i == k) return false;
  }
}

/// Union rank as the maximum size of a partitionable subset.
inline int brute_union_rank(std::span<const Matroid> ms, Mask subset) {
  int best = 0;
  for (Mask t = subset;; t = (t - 1) & subset) {
    if (subset_size(t) > best && brute_partitionable(ms, t)) best = subset_size(t);
    if (t == 0) break;
  }
  return best;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

inline SparsePolynomial random_poly(SplitMix64& rng, int nvars, int max_deg, int max_terms) {
  SparsePolynomial p(nvars);
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t) {
    SparsePolynomial::Exponents e(nvars, 0);
    int deg = static_cast<int>(rng.below(max_deg + 1));
    for (int d = 0; d < deg; ++d) e[rng.below(nvars)] += 1;
    long coeff = static_cast<long>(rng.below(19)) - 9;
    p.add_term(e, Rational(coeff));
  }
  return p;
}

/// Rank axioms: normalization, unit increase, submodularity.  Exhaustive over
/// all subsets (use only for small ground sets).
inline bool rank_axioms_exhaustive(const Matroid& m) {
  const int n = m.size();
  const Mask all = full_mask(n);
  if (m.rank(Mask{0}) != 0) return false;
  for (Mask s = 0; s <= all; ++s) {
    int rs = m.rank(s);
    if (rs < 0 || rs > subset_size(s)) return false;
    for (int e = 0; e < n; ++e) {
      if (s & bit(e)) continue;
      int re = m.rank(s | bit(e));
      if (re < rs || re > rs + 1) return false;
    }
    if (s == all) break;
  }
  for (Mask a = 0; a <= all; ++a) {
    for (Mask b = a; b <= all; ++b) {
      if (m.rank(a) + m.rank(b) < m.rank(a | b) + m.rank(a & b)) return false;
      if (b == all) break;
    }
    if (a == all) break;
  }
  return true;
}

/// Spot-check of the axioms on random subset triples (for larger ground sets).
inline bool rank_axioms_sampled(const Matroid& m, int samples, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = m.size();
  const Mask all = full_mask(n);
  if (m.rank(Mask{0}) != 0) return false;
  for (int i = 0; i < samples; ++i) {
    Mask a = rng.next() & all, b = rng.next() & all;
    if (m.rank(a) + m.rank(b) < m.rank(a | b) + m.rank(a & b)) return false;
    int e = static_cast<int>(rng.below(n));
    if (!(a & bit(e))) {
      int ra = m.rank(a), re = m.rank(a | bit(e));
      if (re < ra || re > ra + 1) return false;
    }
  }
  return true;
}

}  // namespace oracles
