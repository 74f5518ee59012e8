#include "terracini/builtins.hpp"

#include <algorithm>
#include <cctype>

#include "terracini/polytope.hpp"

namespace terracini {

namespace {

std::string normalize(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return c == '-' ? '_' : std::tolower(c); });
  return s;
}

long long get_param(const std::map<std::string, long long>& params, const std::string& key,
                    std::optional<long long> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  throw std::invalid_argument("builtin parameter '" + key + "' is required");
}

VarietySpec veronese(long long n, long long d) {
  if (n < 1 || d < 1) throw std::invalid_argument("veronese needs n >= 1, d >= 1");
  LatticePointSet pts = dilated_simplex(static_cast<int>(n), static_cast<int>(d));
  return toric_from_points(pts, GroundSet::numbered(pts.size(), "z", 0));
}

VarietySpec cayley_menger(long long d, long long n) {
  if (d < 1 || n < 2) throw std::invalid_argument("cayley_menger needs d >= 1, n >= 2");
  const int dim = static_cast<int>(d), verts = static_cast<int>(n);
  const int m = dim * verts;
  std::vector<std::string> params;
  for (int v = 1; v <= verts; ++v)
    for (int k = 1; k <= dim; ++k)
      params.push_back(dim == 1 ? "p" + std::to_string(v)
                                : "p" + std::to_string(v) + "_" + std::to_string(k));
  std::vector<SparsePolynomial> comps;
  std::vector<std::string> labels;
  for (int i = 1; i <= verts; ++i)
    for (int j = i + 1; j <= verts; ++j) {
      SparsePolynomial sum(m);
      for (int k = 0; k < dim; ++k) {
        SparsePolynomial diff = SparsePolynomial::variable(m, (i - 1) * dim + k) -
                                SparsePolynomial::variable(m, (j - 1) * dim + k);
        sum = sum + diff * diff;
      }
      comps.push_back(std::move(sum));
      labels.push_back("z" + std::to_string(i) + std::to_string(j));
    }
  return make_polymap(std::move(params), std::move(comps), GroundSet(std::move(labels)));
}

VarietySpec sym_rank_one(long long n, std::vector<std::string> labels = {}) {
  if (n < 1) throw std::invalid_argument("sym_rank_one needs n >= 1");
  const int nn = static_cast<int>(n);
  std::vector<std::vector<long long>> rows(nn);
  std::vector<std::string> default_labels;
  for (int i = 1; i <= nn; ++i)
    for (int j = i; j <= nn; ++j) {
      for (int k = 1; k <= nn; ++k)
        rows[k - 1].push_back((k == i ? 1 : 0) + (k == j ? 1 : 0));
      default_labels.push_back("a" + std::to_string(i) + std::to_string(j));
    }
  if (labels.empty()) labels = std::move(default_labels);
  return make_toric(std::move(rows), true, GroundSet(std::move(labels)));
}

VarietySpec segre(long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("segre needs m >= 1, n >= 1");
  const int mm = static_cast<int>(m), nn = static_cast<int>(n);
  std::vector<std::vector<long long>> rows(mm + nn);
  std::vector<std::string> labels;
  for (int i = 1; i <= mm; ++i)
    for (int j = 1; j <= nn; ++j) {
      for (int k = 0; k < mm + nn; ++k)
        rows[k].push_back((k == i - 1 ? 1 : 0) + (k == mm + j - 1 ? 1 : 0));
      labels.push_back("b" + std::to_string(i) + std::to_string(j));
    }
  return make_toric(std::move(rows), true, GroundSet(std::move(labels)));
}

VarietySpec rational_normal_curve(long long deg) {
  if (deg < 1) throw std::invalid_argument("rational_normal_curve needs deg >= 1");
  std::vector<long long> row(deg + 1);
  for (long long i = 0; i <= deg; ++i) row[i] = i;
  return make_toric({row}, true, GroundSet::numbered(static_cast<int>(deg) + 1));
}

// Cylinder over a seeded generic-coordinates rational normal quartic: five
// coordinates from g(nu_4), a sixth free coordinate z6 (the coloop).
VarietySpec coloop_extension(long long seed) {
  VarietySpec curve = rational_normal_curve(4);
  LinearChangeSpec change;
  change.seed = static_cast<std::uint64_t>(seed);
  PolyMapSpec changed = compose_linear(curve, change);
  const int m = changed.param_count() + 1;
  std::vector<SparsePolynomial> comps;
  for (const auto& c : changed.components) comps.push_back(c.reindexed(m, 0));
  comps.push_back(SparsePolynomial::variable(m, m - 1));
  std::vector<std::string> params = changed.param_names;
  params.push_back("c");
  return make_polymap(std::move(params), std::move(comps), GroundSet::numbered(6));
}

VarietySpec p1xp2_12() {
  // Columns in the displayed order: the six monomials of O(2) on P^2 in
  // graded-lex order, first with u^0 and then with u^1.
  std::vector<std::vector<long long>> rows = {
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
      {0, 1, 0, 2, 1, 0, 0, 1, 0, 2, 1, 0},
      {0, 0, 1, 0, 1, 2, 0, 0, 1, 0, 1, 2},
  };
  return make_toric(std::move(rows), true, GroundSet::numbered(12));
}

VarietySpec p1xp1_23() {
  LatticePointSet pts = grid({3, 2});
  return toric_from_points(pts, GroundSet::numbered(12));
}

VarietySpec threefold_p() {
  // Lattice points of P in the displayed column order; the first four and the
  // last four columns are bases.
  std::vector<std::vector<long long>> rows = {
      {0, 1, 0, 2, 1, 1, 1, 0},
      {0, 0, 2, 2, 1, 1, 2, 1},
      {1, 2, 1, 1, 0, 1, 1, 1},
  };
  return make_toric(std::move(rows), true, GroundSet::numbered(8));
}

VarietySpec table1_x1() {
  // Quadric Veronese of P^3 with the coordinates of the generic symmetric
  // matrix: z_i5 on the diagonal, z_ij off it.
  std::vector<std::string> labels = {"z15", "z12", "z13", "z14", "z25",
                                     "z23", "z24", "z35", "z34", "z45"};
  return sym_rank_one(4, std::move(labels));
}

VarietySpec table1_x3(long long seed) {
  LinearChangeSpec change;
  change.seed = static_cast<std::uint64_t>(seed);
  return compose_linear(table1_x1(), change);
}

}  // namespace

VarietySpec make_builtin(const std::string& raw_name,
                         const std::map<std::string, long long>& params) {
  const std::string name = normalize(raw_name);
  if (name == "veronese") return veronese(get_param(params, "n", 2), get_param(params, "d"));
  if (name == "cayley_menger")
    return cayley_menger(get_param(params, "d"), get_param(params, "n"));
  if (name == "sym_rank_one") return sym_rank_one(get_param(params, "n"));
  if (name == "segre") return segre(get_param(params, "m"), get_param(params, "n"));
  if (name == "rational_normal_curve") return rational_normal_curve(get_param(params, "deg"));
  if (name == "coloop_extension")
    return coloop_extension(get_param(params, "seed", static_cast<long long>(kColoopChangeSeed)));
  if (name == "p1xp2_12") return p1xp2_12();
  if (name == "p1xp1_23") return p1xp1_23();
  if (name == "threefold_p") return threefold_p();
  if (name == "table1_x1") return table1_x1();
  if (name == "table1_x2") return cayley_menger(1, 5);
  if (name == "table1_x3")
    return table1_x3(get_param(params, "seed", static_cast<long long>(kTable1ChangeSeed)));
  throw std::invalid_argument("unknown builtin '" + raw_name + "'");
}

VarietySpec make_builtin_call(const std::string& call) {
  auto open = call.find('(');
  if (open == std::string::npos) return make_builtin(call);
  if (call.back() != ')') throw std::invalid_argument("malformed builtin call '" + call + "'");
  std::string name = normalize(call.substr(0, open));
  std::vector<long long> args;
  std::string body = call.substr(open + 1, call.size() - open - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    args.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  static const std::map<std::string, std::vector<std::string>> positional = {
      {"veronese", {"n", "d"}},
      {"cayley_menger", {"d", "n"}},
      {"sym_rank_one", {"n"}},
      {"segre", {"m", "n"}},
      {"rational_normal_curve", {"deg"}},
      {"coloop_extension", {"seed"}},
      {"table1_x3", {"seed"}},
  };
  std::map<std::string, long long> params;
  auto it = positional.find(name);
  if (!args.empty()) {
    if (it == positional.end())
      throw std::invalid_argument("builtin '" + name + "' takes no parameters");
    auto keys = it->second;
    if (name == "veronese" && args.size() == 1) keys = {"d"};
    if (args.size() > keys.size())
      throw std::invalid_argument("too many parameters for builtin '" + name + "'");
    for (std::size_t i = 0; i < args.size(); ++i) params[keys[i]] = args[i];
  }
  return make_builtin(name, params);
}

std::vector<std::string> builtin_names() {
  return {"veronese",         "cayley_menger", "sym_rank_one", "segre",
          "rational_normal_curve", "coloop_extension", "p1xp2_12",    "p1xp1_23",
          "threefold_p",      "table1_x1",     "table1_x2",    "table1_x3"};
}

}  // namespace terracini
