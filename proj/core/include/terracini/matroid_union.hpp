#pragma once

#include <optional>
#include <vector>

#include "terracini/matroid.hpp"

namespace terracini {

/// Splitting of a union-independent set into per-summand independent parts.
struct PartitionCertificate {
  Mask subset;              // E
  std::vector<Mask> parts;  // disjoint, union = E, parts[i] independent in summand i
};

struct PartitionOutcome {
  /// Present exactly when E is independent in the matroid union.
  std::optional<PartitionCertificate> certificate;
  /// Rank of E in the union (= |E| when the certificate is present).
  int union_rank = 0;
};

/// Edmonds' matroid-partition algorithm: greedy insertion in index order with
/// BFS augmenting paths over the exchange digraph.  Deterministic.
PartitionOutcome matroid_partition(std::span<const Matroid> summands, Mask subset);

/// The union matroid M_1 v ... v M_s; its rank oracle runs matroid_partition.
Matroid matroid_union(std::vector<Matroid> summands);

/// s-fold self-union sM.
Matroid self_union(const Matroid& m, int s);

}  // namespace terracini
