#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/subset.hpp"

namespace terracini {

inline constexpr int kDefaultEnumerationCap = 24;

/// Labeled ground set; elements are addressed by index internally and by
/// label externally.
struct GroundSet {
  std::vector<std::string> labels;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> l);
  /// Default labels z1..zN.
  static GroundSet numbered(int n, const std::string& prefix = "z", int start = 1);

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  bool operator==(const GroundSet& o) const { return labels == o.labels; }
};

enum class Provenance { ColumnMatroid, Jacobian, Union, Uniform, Graphic, Explicit };

const char* provenance_name(Provenance p);

struct EnumerationCapExceeded : std::runtime_error {
  EnumerationCapExceeded(int n, int cap)
      : std::runtime_error("ground set of size " + std::to_string(n) +
                           " exceeds the enumeration cap " + std::to_string(cap)),
        size(n),
        cap(cap) {}
  int size;
  int cap;
};

/// Matroid given by a memoized rank oracle.  Handles are cheap to copy and
/// share the memo; rank queries are safe to issue concurrently.
class Matroid {
 public:
  using RankFn = std::function<int(Mask)>;

  Matroid(GroundSet ground, RankFn oracle, Provenance prov);

  const GroundSet& ground() const;
  int size() const { return ground().size(); }
  Provenance provenance() const;

  int rank(Mask subset) const;
  int rank(std::span<const int> elements) const { return rank(checked_mask(elements)); }
  /// Rank of the full ground set.
  int rank() const { return rank(full_mask(size())); }
  bool is_independent(Mask subset) const { return rank(subset) == subset_size(subset); }
  bool is_basis(Mask subset) const {
    return subset_size(subset) == rank() && is_independent(subset);
  }

  /// All bases, each as a bitmask, in lexicographic order of the sorted index
  /// lists.  Refuses ground sets larger than the cap.
  std::vector<Mask> bases(int cap = kDefaultEnumerationCap) const;

  Mask loops() const;
  Mask coloops() const;

  Mask checked_mask(std::span<const int> elements) const;
  Mask mask_of_labels(std::span<const std::string> labels) const;

  // Constructors for the stock families.
  static Matroid uniform(int n, int r, GroundSet ground = {});
  static Matroid graphic(int n_vertices, std::vector<std::pair<int, int>> edges,
                         GroundSet ground = {});
  static Matroid column_matroid(RationalMatrix m, GroundSet ground = {});
  /// Linear matroid of the columns of one or more F_p matrices; the rank of a
  /// subset is the maximum over the matrices (used for Jacobian sampling,
  /// where point ranks only ever under-report the generic rank).
  static Matroid linear_mod_p(std::vector<FpMatrix> samples, PrimeField field, GroundSet ground,
                              Provenance prov = Provenance::Jacobian);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Weak order: true iff every m1-independent set is m2-independent
/// (equivalently, every set dependent in m2 is dependent in m1).  Checked by
/// testing every basis of m1 for independence in m2.
bool weak_order_leq(const Matroid& m1, const Matroid& m2, int cap = kDefaultEnumerationCap);

}  // namespace terracini
