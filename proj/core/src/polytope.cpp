#include "terracini/polytope.hpp"

#include <algorithm>
#include <functional>

namespace terracini {

bool LatticePointSet::contains(const std::vector<long long>& q) const {
  return std::binary_search(points.begin(), points.end(), q);
}

int LatticePointSet::index_of(const std::vector<long long>& q) const {
  auto it = std::lower_bound(points.begin(), points.end(), q);
  if (it == points.end() || *it != q) return -1;
  return static_cast<int>(it - points.begin());
}

LatticePointSet make_point_set(int dim, std::vector<std::vector<long long>> points) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("lattice point has wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePointSet s;
  s.dim = dim;
  s.points = std::move(points);
  return s;
}

namespace {

void simplex_rec(int n, int d, std::vector<long long>& cur, int used,
                 std::vector<std::vector<long long>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v + used <= d; ++v) {
    cur.push_back(v);
    simplex_rec(n, d, cur, used + v, out);
    cur.pop_back();
  }
}

}  // namespace

LatticePointSet dilated_simplex(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("dilated simplex needs n >= 1, d >= 1");
  std::vector<std::vector<long long>> pts;
  std::vector<long long> cur;
  simplex_rec(n, d, cur, 0, pts);
  return make_point_set(n, std::move(pts));
}

LatticePointSet grid(const std::vector<long long>& box) {
  if (box.empty()) throw std::invalid_argument("grid needs at least one bound");
  for (long long b : box)
    if (b < 0) throw std::invalid_argument("grid bounds must be nonnegative");
  std::vector<std::vector<long long>> pts{{}};
  for (long long b : box) {
    std::vector<std::vector<long long>> next;
    for (const auto& p : pts)
      for (long long v = 0; v <= b; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return make_point_set(static_cast<int>(box.size()), std::move(pts));
}

namespace {

// q in conv(S) for affinely independent S, via the exact barycentric system.
bool in_simplex(const std::vector<long long>& q,
                const std::vector<const std::vector<long long>*>& simplex, int dim) {
  const int k = static_cast<int>(simplex.size());
  // rows: dim coordinate equations plus the sum-to-one equation
  RationalMatrix a(dim + 1, k + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = Rational(static_cast<long>((*simplex[j])[i]));
    a(i, k) = Rational(static_cast<long>(q[i]));
  }
  for (int j = 0; j < k; ++j) a(dim, j) = 1;
  a(dim, k) = 1;
  // Gaussian elimination on the augmented system
  int row = 0;
  std::vector<int> pivot_col(dim + 1, -1);
  for (int c = 0; c < k && row < dim + 1; ++c) {
    int pr = row;
    while (pr < dim + 1 && a(pr, c) == 0) ++pr;
    if (pr == dim + 1) continue;
    for (int j = 0; j <= k; ++j) std::swap(a(pr, j), a(row, j));
    Rational inv = 1 / a(row, c);
    for (int j = 0; j <= k; ++j) a(row, j) *= inv;
    for (int i = 0; i < dim + 1; ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j <= k; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_col[row] = c;
    ++row;
  }
  // inconsistent system?
  for (int i = row; i < dim + 1; ++i)
    if (a(i, k) != 0) return false;
  if (row < k) return false;  // affinely dependent: covered by smaller subsets
  std::vector<Rational> lambda(k, Rational(0));
  for (int i = 0; i < row; ++i) lambda[pivot_col[i]] = a(i, k);
  for (const auto& l : lambda)
    if (l < 0) return false;
  return true;
}

bool in_hull(const std::vector<long long>& q,
             const std::vector<std::vector<long long>>& vertices, int dim) {
  const int n = static_cast<int>(vertices.size());
  // Caratheodory: q is in the hull iff it lies in some simplex on <= dim+1
  // vertices.
  std::vector<int> pick;
  std::function<bool(int, int)> rec = [&](int start, int want) -> bool {
    if (want == 0) {
      std::vector<const std::vector<long long>*> simplex;
      for (int i : pick) simplex.push_back(&vertices[i]);
      return in_simplex(q, simplex, dim);
    }
    for (int i = start; i + want <= n; ++i) {
      pick.push_back(i);
      if (rec(i + 1, want - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= dim + 1; ++k)
    if (rec(0, k)) return true;
  return false;
}

}  // namespace

LatticePointSet hull_points(const std::vector<std::vector<long long>>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("hull needs at least one vertex");
  const int dim = static_cast<int>(vertices[0].size());
  if (dim > 3) throw std::invalid_argument("hull_points supports dimension <= 3");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("vertex dimension mismatch");
  std::vector<long long> lo = vertices[0], hi = vertices[0];
  for (const auto& v : vertices)
    for (int i = 0; i < dim; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<std::vector<long long>> pts;
  std::vector<long long> q(dim);
  std::function<void(int)> iterate = [&](int i) {
    if (i == dim) {
      if (in_hull(q, vertices, dim)) pts.push_back(q);
      return;
    }
    for (long long v = lo[i]; v <= hi[i]; ++v) {
      q[i] = v;
      iterate(i + 1);
    }
  };
  iterate(0);
  return make_point_set(dim, std::move(pts));
}

LatticePointSet product(const LatticePointSet& a, const LatticePointSet& b) {
  std::vector<std::vector<long long>> pts;
  pts.reserve(a.points.size() * b.points.size());
  for (const auto& p : a.points)
    for (const auto& q : b.points) {
      std::vector<long long> r = p;
      r.insert(r.end(), q.begin(), q.end());
      pts.push_back(std::move(r));
    }
  return make_point_set(a.dim + b.dim, std::move(pts));
}

std::vector<PatternMatch> scan_pattern(const LatticePointSet& points,
                                       const LatticePointSet& pattern) {
  if (points.dim != pattern.dim) throw std::invalid_argument("pattern dimension mismatch");
  if (pattern.points.empty()) throw std::invalid_argument("empty pattern");
  std::vector<PatternMatch> out;
  const auto& anchor = pattern.points[0];  // lex-min of the pattern
  for (const auto& q : points.points) {
    std::vector<long long> offset(points.dim);
    for (int i = 0; i < points.dim; ++i) offset[i] = q[i] - anchor[i];
    PatternMatch match;
    match.offset = offset;
    bool ok = true;
    for (const auto& p : pattern.points) {
      std::vector<long long> shifted(points.dim);
      for (int i = 0; i < points.dim; ++i) shifted[i] = p[i] + offset[i];
      int idx = points.index_of(shifted);
      if (idx < 0) {
        ok = false;
        break;
      }
      match.indices.push_back(idx);
    }
    if (ok) {
      std::sort(match.indices.begin(), match.indices.end());
      out.push_back(std::move(match));
    }
  }
  return out;  // already sorted by offset: anchors visited in lex order
}

ToricSpec toric_from_points(const LatticePointSet& points, GroundSet labels) {
  if (points.points.empty()) throw std::invalid_argument("toric spec needs at least one point");
  std::vector<std::vector<long long>> rows(points.dim,
                                           std::vector<long long>(points.points.size()));
  for (int j = 0; j < points.size(); ++j)
    for (int i = 0; i < points.dim; ++i) rows[i][j] = points.points[j][i];
  return make_toric(std::move(rows), /*homogenize=*/true, std::move(labels));
}

LatticePointSet two_delta_pattern() { return dilated_simplex(2, 2); }

}  // namespace terracini
