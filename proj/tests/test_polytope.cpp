#include <doctest.h>

#include <algorithm>

#include "terracini/builtins.hpp"
#include "terracini/polytope.hpp"

using namespace terracini;

TEST_CASE("dilated simplices") {
  CHECK(dilated_simplex(2, 3).size() == 10);
  CHECK(dilated_simplex(2, 2).size() == 6);
  CHECK(dilated_simplex(1, 1).size() == 2);
  LatticePointSet p = dilated_simplex(2, 2);
  CHECK(std::is_sorted(p.points.begin(), p.points.end()));
  CHECK(p.contains({1, 1}));
  CHECK_FALSE(p.contains({2, 2}));
  CHECK_THROWS_AS(dilated_simplex(0, 1), std::invalid_argument);
}

TEST_CASE("grids and products") {
  CHECK(grid({3, 2}).size() == 12);
  CHECK(grid({1}).size() == 2);
  // [0,1] segment times the quadratic-Veronese triangle: the twelve exponent
  // vectors of the (1,2) embedding of P^1 x P^2
  LatticePointSet prod = product(grid({1}), dilated_simplex(2, 2));
  CHECK(prod.size() == 12);
  CHECK(prod.dim == 3);
  VarietySpec nn_spec = make_builtin_call("p1xp2_12");
  const ToricSpec& nn = std::get<ToricSpec>(nn_spec);
  std::vector<std::vector<long long>> nn_cols;
  for (int j = 0; j < nn.coordinate_count(); ++j)
    nn_cols.push_back({nn.exponents(0, j), nn.exponents(1, j), nn.exponents(2, j)});
  std::sort(nn_cols.begin(), nn_cols.end());
  CHECK(prod.points == nn_cols);
}

TEST_CASE("hull points") {
  std::vector<std::vector<long long>> verts = {{0, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 2, 1}, {1, 1, 0}};
  LatticePointSet hull = hull_points(verts);
  std::vector<std::vector<long long>> want = {{0, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 2, 1},
                                              {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {0, 1, 1}};
  std::sort(want.begin(), want.end());
  CHECK(hull.points == want);

  CHECK(hull_points({{0, 0}, {1, 0}}).size() == 2);
  CHECK(hull_points({{2, 0}, {0, 2}, {0, 0}}).points == dilated_simplex(2, 2).points);
  CHECK_THROWS_AS(hull_points({{0, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("pattern scans") {
  LatticePointSet two_delta = two_delta_pattern();
  CHECK(scan_pattern(dilated_simplex(2, 3), two_delta).size() == 3);
  CHECK(scan_pattern(dilated_simplex(2, 4), two_delta).size() == 6);
  for (int d = 2; d <= 8; ++d)
    CHECK(scan_pattern(dilated_simplex(2, d), two_delta).size() ==
          static_cast<std::size_t>(d * (d - 1) / 2));

  LatticePointSet origin = make_point_set(2, {{0, 0}});
  CHECK(scan_pattern(dilated_simplex(2, 3), origin).size() == 10);

  // translate both inputs by the same vector: same number of matches, and
  // offsets shift by the translation difference of the anchors
  auto translate = [](const LatticePointSet& s, long long dx, long long dy) {
    std::vector<std::vector<long long>> pts;
    for (auto p : s.points) {
      p[0] += dx;
      p[1] += dy;
      pts.push_back(p);
    }
    return make_point_set(2, pts);
  };
  LatticePointSet moved_points = translate(dilated_simplex(2, 4), 3, -2);
  LatticePointSet moved_pattern = translate(two_delta, 3, -2);
  auto a = scan_pattern(dilated_simplex(2, 4), two_delta);
  auto b = scan_pattern(moved_points, moved_pattern);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].indices == b[i].indices);

  CHECK_THROWS_AS(scan_pattern(dilated_simplex(2, 3), make_point_set(3, {{0, 0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("toric_from_points") {
  LatticePointSet simplex = dilated_simplex(2, 3);
  ToricSpec spec = toric_from_points(simplex);
  VarietySpec v_spec = make_builtin_call("veronese(2,3)");
  const ToricSpec& veronese = std::get<ToricSpec>(v_spec);
  CHECK(spec.exponents == veronese.exponents);
  CHECK(spec.homogenize);
  CHECK(spec.labels.labels.front() == "z1");  // default labels; the builtin uses z0..z9

  ToricSpec point = toric_from_points(make_point_set(2, {{1, 2}}));
  RationalMatrix eff(3, 1);
  eff(0, 0) = 1; eff(1, 0) = 2; eff(2, 0) = 1;
  CHECK(rank_rational(eff) == 1);
  CHECK(point.param_count() == 3);

  ToricSpec dup = toric_from_points(make_point_set(1, {{0}, {1}}));
  CHECK_FALSE(dup.has_duplicate_columns());
  ToricSpec dup2 = make_toric({{1, 1}}, true);
  CHECK(dup2.has_duplicate_columns());
}

TEST_CASE("polytope JSON parsing") {
  CHECK(parse_polytope_json(R"({"type":"simplex","dim":2,"degree":3})").size() == 10);
  CHECK(parse_polytope_json(R"({"type":"grid","box":[3,2]})").size() == 12);
  CHECK(parse_polytope_json(R"({"type":"points","dim":1,"points":[[4],[1],[4]]})").points ==
        std::vector<std::vector<long long>>{{1}, {4}});
  CHECK(parse_polytope_json(
            R"({"type":"hull","vertices":[[0,0],[2,0],[0,2]]})").size() == 6);
  CHECK(parse_polytope_json(
            R"({"type":"product","factors":[{"type":"grid","box":[1]},
                {"type":"simplex","dim":2,"degree":2}]})").size() == 12);
  CHECK_THROWS_AS(parse_polytope_json(R"({"type":"moebius"})"), std::invalid_argument);
}
