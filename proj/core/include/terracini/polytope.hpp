#pragma once

#include <vector>

#include "terracini/variety.hpp"

namespace terracini {

/// Finite set of lattice points, kept distinct and lexicographically sorted;
/// the sort order fixes the coordinate labeling of the derived toric spec.
struct LatticePointSet {
  int dim = 0;
  std::vector<std::vector<long long>> points;

  int size() const { return static_cast<int>(points.size()); }
  bool contains(const std::vector<long long>& q) const;
  int index_of(const std::vector<long long>& q) const;  // -1 if absent
};

LatticePointSet make_point_set(int dim, std::vector<std::vector<long long>> points);

/// All nonnegative integer vectors of length n with coordinate sum <= d.
LatticePointSet dilated_simplex(int n, int d);

/// Full integer box: 0 <= x_i <= box[i].
LatticePointSet grid(const std::vector<long long>& box);

/// All lattice points of the convex hull of the given vertices (dim <= 3),
/// decided by exact rational feasibility.
LatticePointSet hull_points(const std::vector<std::vector<long long>>& vertices);

/// Cartesian product: every concatenation a + b, sorted.
LatticePointSet product(const LatticePointSet& a, const LatticePointSet& b);

struct PatternMatch {
  std::vector<long long> offset;
  std::vector<int> indices;  // positions of offset+pattern inside the point set
};

/// All integer translates of the pattern inside the point set, sorted by
/// offset.
std::vector<PatternMatch> scan_pattern(const LatticePointSet& points,
                                       const LatticePointSet& pattern);

/// Toric spec with one column per point in sorted order and the
/// homogenization row appended.
ToricSpec toric_from_points(const LatticePointSet& points, GroundSet labels = {});

/// Lattice points of conv{(0,0),(2,0),(0,2)}: the quadratic-Veronese pattern.
LatticePointSet two_delta_pattern();

/// Parses the polytope JSON schema: points | simplex | grid | hull | product.
LatticePointSet parse_polytope_json(const std::string& text);

}  // namespace terracini
