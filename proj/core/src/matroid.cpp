#include "terracini/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace terracini {

GroundSet::GroundSet(std::vector<std::string> l) : labels(std::move(l)) {
  if (labels.size() > 64) throw std::invalid_argument("ground sets are capped at 64 elements");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw std::invalid_argument("duplicate ground-set label '" + labels[i] + "'");
}

GroundSet GroundSet::numbered(int n, const std::string& prefix, int start) {
  std::vector<std::string> l;
  l.reserve(n);
  for (int i = 0; i < n; ++i) l.push_back(prefix + std::to_string(start + i));
  return GroundSet(std::move(l));
}

int GroundSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown ground-set label '" + label + "'");
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ColumnMatroid: return "column-matroid";
    case Provenance::Jacobian: return "jacobian";
    case Provenance::Union: return "union";
    case Provenance::Uniform: return "uniform";
    case Provenance::Graphic: return "graphic";
    case Provenance::Explicit: return "explicit";
  }
  return "?";
}

struct Matroid::Impl {
  GroundSet ground;
  RankFn oracle;
  Provenance prov;
  mutable std::unordered_map<Mask, int> memo;
  mutable std::mutex memo_mutex;
};

Matroid::Matroid(GroundSet ground, RankFn oracle, Provenance prov)
    : impl_(std::make_shared<Impl>()) {
  impl_->ground = std::move(ground);
  impl_->oracle = std::move(oracle);
  impl_->prov = prov;
}

const GroundSet& Matroid::ground() const { return impl_->ground; }
Provenance Matroid::provenance() const { return impl_->prov; }

int Matroid::rank(Mask subset) const {
  if (size() < 64 && (subset >> size()) != 0)
    throw std::invalid_argument("subset contains elements outside the ground set");
  {
    std::lock_guard<std::mutex> lock(impl_->memo_mutex);
    auto it = impl_->memo.find(subset);
    if (it != impl_->memo.end()) return it->second;
  }
  int r = impl_->oracle(subset);
  std::lock_guard<std::mutex> lock(impl_->memo_mutex);
  impl_->memo.emplace(subset, r);
  return r;
}

Mask Matroid::checked_mask(std::span<const int> elements) const {
  Mask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= size())
      throw std::invalid_argument("element index " + std::to_string(e) + " outside ground set");
    m |= bit(e);
  }
  return m;
}

Mask Matroid::mask_of_labels(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(ground().index_of(l));
  return m;
}

namespace {

void enumerate_rec(const Matroid& m, int n, int r, int start, Mask prefix, int have,
                   std::vector<Mask>& out) {
  if (have == r) {
    out.push_back(prefix);
    return;
  }
  for (int e = start; e < n; ++e) {
    if (n - e < r - have) break;
    Mask next = prefix | bit(e);
    if (m.is_independent(next)) enumerate_rec(m, n, r, e + 1, next, have + 1, out);
  }
}

}  // namespace

std::vector<Mask> Matroid::bases(int cap) const {
  if (size() > cap) throw EnumerationCapExceeded(size(), cap);
  int r = rank();
  std::vector<Mask> out;
  enumerate_rec(*this, size(), r, 0, 0, 0, out);
  return out;
}

Mask Matroid::loops() const {
  Mask out = 0;
  for (int e = 0; e < size(); ++e)
    if (rank(bit(e)) == 0) out |= bit(e);
  return out;
}

Mask Matroid::coloops() const {
  Mask all = full_mask(size());
  int r = rank(all);
  Mask out = 0;
  for (int e = 0; e < size(); ++e)
    if (rank(all & ~bit(e)) == r - 1) out |= bit(e);
  return out;
}

Matroid Matroid::uniform(int n, int r, GroundSet ground) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  if (ground.size() == 0) ground = GroundSet::numbered(n);
  if (ground.size() != n) throw std::invalid_argument("uniform matroid: label count mismatch");
  return Matroid(std::move(ground),
                 [r](Mask s) { return std::min(r, subset_size(s)); }, Provenance::Uniform);
}

Matroid Matroid::graphic(int n_vertices, std::vector<std::pair<int, int>> edges,
                         GroundSet ground) {
  for (auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw std::invalid_argument("graphic matroid: edge endpoint out of range");
  if (ground.size() == 0) ground = GroundSet::numbered(static_cast<int>(edges.size()), "e");
  if (ground.size() != static_cast<int>(edges.size()))
    throw std::invalid_argument("graphic matroid: label count mismatch");
  auto oracle = [n_vertices, edges = std::move(edges)](Mask s) {
    // rank = |edges of a spanning forest| via union-find
    std::vector<int> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int r = 0;
    for (int i : indices_of(s)) {
      int a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  };
  return Matroid(std::move(ground), std::move(oracle), Provenance::Graphic);
}

Matroid Matroid::column_matroid(RationalMatrix m, GroundSet ground) {
  if (ground.size() == 0) ground = GroundSet::numbered(static_cast<int>(m.cols()));
  if (ground.size() != static_cast<int>(m.cols()))
    throw std::invalid_argument("column matroid: label count mismatch");
  auto oracle = [m = std::move(m)](Mask s) {
    auto idx = indices_of(s);
    return static_cast<int>(rank_rational(select_columns(m, idx)));
  };
  return Matroid(std::move(ground), std::move(oracle), Provenance::ColumnMatroid);
}

Matroid Matroid::linear_mod_p(std::vector<FpMatrix> samples, PrimeField field, GroundSet ground,
                              Provenance prov) {
  if (samples.empty()) throw std::invalid_argument("linear matroid needs at least one sample");
  std::size_t cols = samples[0].cols();
  for (const auto& s : samples)
    if (s.cols() != cols) throw std::invalid_argument("sample matrices have unequal column counts");
  if (ground.size() == 0) ground = GroundSet::numbered(static_cast<int>(cols));
  if (ground.size() != static_cast<int>(cols))
    throw std::invalid_argument("linear matroid: label count mismatch");
  auto oracle = [samples = std::move(samples), field](Mask s) {
    auto idx = indices_of(s);
    std::size_t best = 0;
    for (const auto& m : samples) best = std::max(best, rank_mod_p(select_columns(m, idx), field));
    return static_cast<int>(best);
  };
  return Matroid(std::move(ground), std::move(oracle), prov);
}

bool weak_order_leq(const Matroid& m1, const Matroid& m2, int cap) {
  if (!(m1.ground() == m2.ground()))
    throw std::invalid_argument("weak order comparison needs a common ground set");
  for (Mask b : m1.bases(cap))
    if (!m2.is_independent(b)) return false;
  return true;
}

}  // namespace terracini
