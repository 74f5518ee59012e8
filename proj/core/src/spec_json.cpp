#include <json.hpp>

#include "terracini/builtins.hpp"
#include "terracini/polytope.hpp"
#include "terracini/variety.hpp"

namespace terracini {

namespace {

using nlohmann::json;

GroundSet labels_from(const json& j) {
  if (!j.contains("labels")) return {};
  return GroundSet(j.at("labels").get<std::vector<std::string>>());
}

VarietySpec parse_variety(const json& j);

VarietySpec parse_linchange(const json& j) {
  VarietySpec inner = parse_variety(j.at("inner"));
  LinearChangeSpec change;
  if (j.contains("matrix")) {
    auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw std::invalid_argument("matrix rows have unequal lengths");
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = Rational(static_cast<long>(rows[i][k]));
    }
    change.matrix = std::move(m);
  } else if (j.contains("seed")) {
    change.seed = j.at("seed").get<std::uint64_t>();
  } else {
    throw std::invalid_argument("linchange needs a 'matrix' or a 'seed'");
  }
  if (j.contains("magnitude")) change.magnitude = j.at("magnitude").get<int>();
  return compose_linear(inner, change);
}

VarietySpec parse_variety(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "toric") {
    auto rows = j.at("exponents").get<std::vector<std::vector<long long>>>();
    bool homogenize = j.value("homogenize", true);
    return make_toric(std::move(rows), homogenize, labels_from(j));
  }
  if (type == "polymap") {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    auto comps = j.at("components").get<std::vector<std::string>>();
    return make_polymap(std::move(vars), comps, labels_from(j));
  }
  if (type == "linchange") return parse_linchange(j);
  if (type == "builtin") {
    std::map<std::string, long long> params;
    if (j.contains("params"))
      for (auto& [k, v] : j.at("params").items()) params[k] = v.get<long long>();
    return make_builtin(j.at("name").get<std::string>(), params);
  }
  throw std::invalid_argument("joins and secants cannot nest inside a summand");
}

JoinSpec parse_join(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "join") {
    std::vector<VarietySpec> summands;
    for (const auto& s : j.at("summands")) summands.push_back(parse_variety(s));
    return JoinSpec::of(std::move(summands));
  }
  if (type == "secant") {
    int s = j.at("s").get<int>();
    return JoinSpec::secant(parse_variety(j.at("inner")), s);
  }
  return JoinSpec::of({parse_variety(j)});
}

}  // namespace

JoinSpec parse_spec_json(const std::string& text) {
  json j = json::parse(text);
  return parse_join(j);
}

LatticePointSet parse_polytope_json(const std::string& text) {
  std::function<LatticePointSet(const nlohmann::json&)> parse =
      [&parse](const nlohmann::json& j) -> LatticePointSet {
    const std::string type = j.at("type").get<std::string>();
    if (type == "points") {
      return make_point_set(j.at("dim").get<int>(),
                            j.at("points").get<std::vector<std::vector<long long>>>());
    }
    if (type == "simplex") return dilated_simplex(j.at("dim").get<int>(), j.at("degree").get<int>());
    if (type == "grid") return grid(j.at("box").get<std::vector<long long>>());
    if (type == "hull")
      return hull_points(j.at("vertices").get<std::vector<std::vector<long long>>>());
    if (type == "product") {
      const auto& factors = j.at("factors");
      if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
      LatticePointSet acc = parse(factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, parse(factors[i]));
      return acc;
    }
    throw std::invalid_argument("unknown polytope type '" + type + "'");
  };
  return parse(nlohmann::json::parse(text));
}

}  // namespace terracini
