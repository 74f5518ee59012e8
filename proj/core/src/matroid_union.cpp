#include "terracini/matroid_union.hpp"

#include <algorithm>

namespace terracini {

namespace {

// Tries to add element e to the packing, rewiring along a shortest augmenting
// path in the exchange digraph.  Vertices are packed elements plus e; an arc
// x -> y (y in part i) means y could vacate its slot for x.  Colors and part
// members are explored in index order so results are reproducible.
bool try_place(std::span<const Matroid> ms, std::vector<Mask>& parts, int n, int e) {
  const int s = static_cast<int>(ms.size());
  std::vector<int> color(n, -1);
  for (int i = 0; i < s; ++i)
    for (int x : indices_of(parts[i])) color[x] = i;

  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{e};
  seen[e] = 1;

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int i = 0; i < s; ++i) {
      if (color[x] == i) continue;
      if (ms[i].is_independent(parts[i] | bit(x))) {
        parts[i] |= bit(x);
        for (int cur = x; parent[cur] != -1; cur = parent[cur]) {
          int prev = parent[cur];
          int c = color[cur];
          parts[c] = (parts[c] & ~bit(cur)) | bit(prev);
        }
        return true;
      }
    }
    for (int i = 0; i < s; ++i) {
      if (color[x] == i) continue;
      Mask pi = parts[i];
      for (int y : indices_of(pi)) {
        if (seen[y]) continue;
        if (ms[i].is_independent((pi & ~bit(y)) | bit(x))) {
          seen[y] = 1;
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
  }
  return false;
}

}  // namespace

PartitionOutcome matroid_partition(std::span<const Matroid> summands, Mask subset) {
  if (summands.empty()) throw std::invalid_argument("matroid partition needs at least one summand");
  const GroundSet& g = summands[0].ground();
  for (const auto& m : summands)
    if (!(m.ground() == g)) throw std::invalid_argument("matroid union needs a common ground set");
  const int n = g.size();
  if (n < 64 && (subset >> n) != 0)
    throw std::invalid_argument("subset contains elements outside the ground set");

  std::vector<Mask> parts(summands.size(), 0);
  int placed = 0;
  for (int e : indices_of(subset)) {
    if (try_place(summands, parts, n, e)) ++placed;
  }
  // The augmenting rewires rely on shortest paths; a violated part would mean
  // a bug, so fail loudly rather than return a bogus certificate.
  Mask seen = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if ((parts[i] & seen) != 0 || !summands[i].is_independent(parts[i]))
      throw std::logic_error("matroid partition produced an invalid packing");
    seen |= parts[i];
  }

  PartitionOutcome out;
  out.union_rank = placed;
  if (placed == subset_size(subset)) out.certificate = PartitionCertificate{subset, parts};
  return out;
}

Matroid matroid_union(std::vector<Matroid> summands) {
  if (summands.empty()) throw std::invalid_argument("matroid union needs at least one summand");
  const GroundSet& g = summands[0].ground();
  for (const auto& m : summands)
    if (!(m.ground() == g)) throw std::invalid_argument("matroid union needs a common ground set");
  GroundSet ground = g;
  auto oracle = [ms = std::move(summands)](Mask s) {
    return matroid_partition(ms, s).union_rank;
  };
  return Matroid(std::move(ground), std::move(oracle), Provenance::Union);
}

Matroid self_union(const Matroid& m, int s) {
  if (s < 1) throw std::invalid_argument("self union needs s >= 1");
  return matroid_union(std::vector<Matroid>(s, m));
}

}  // namespace terracini
