#include <benchmark/benchmark.h>

#include "terracini/analysis.hpp"
#include "terracini/builtins.hpp"

using namespace terracini;

namespace {

const MatroidComputationConfig kCfg;
const PrimeField kField;

void BM_RankModP_StackedJacobian(benchmark::State& state) {
  JoinSpec sec = JoinSpec::secant(make_builtin_call("p1xp1_23"), 2);
  auto points = sample_points(kCfg.sampler, sec, 0, kField);
  FpMatrix stack = join_jacobian_at(sec, points, kField);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_mod_p(stack, kField));
  }
}
BENCHMARK(BM_RankModP_StackedJacobian);

void BM_RankRational_Exponents(benchmark::State& state) {
  VarietySpec s8 = make_builtin_call("sym_rank_one(8)");
  ExponentMatrix e = std::get<ToricSpec>(s8).effective_exponents();
  RationalMatrix m(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) m(i, j) = Rational(static_cast<long>(e(i, j)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_rational(m));
  }
}
BENCHMARK(BM_RankRational_Exponents);

void BM_SecantBaseEnumeration(benchmark::State& state) {
  VarietySpec v = make_builtin_call("veronese(2,3)");
  for (auto _ : state) {
    Matroid m = secant_matroid(v, 2, kCfg);
    benchmark::DoNotOptimize(m.bases().size());
  }
}
BENCHMARK(BM_SecantBaseEnumeration);

void BM_UnionRank(benchmark::State& state) {
  Matroid m = algebraic_matroid(make_builtin_call("p1xp1_23"), kCfg);
  std::vector<Matroid> two = {m, m};
  Mask all = full_mask(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matroid_partition(two, all).union_rank);
  }
}
BENCHMARK(BM_UnionRank);

void BM_UnionCheck(benchmark::State& state) {
  JoinSpec sec = JoinSpec::secant(make_builtin_call("veronese(2,3)"), 2);
  for (auto _ : state) {
    UnionCheckReport r = union_check(sec, kCfg);
    benchmark::DoNotOptimize(r.missing_bases.size());
  }
}
BENCHMARK(BM_UnionCheck);

void BM_ScanPattern(benchmark::State& state) {
  LatticePointSet points = dilated_simplex(2, 8);
  LatticePointSet pattern = two_delta_pattern();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_pattern(points, pattern).size());
  }
}
BENCHMARK(BM_ScanPattern);

void BM_SymbolicRank(benchmark::State& state) {
  LinearChangeSpec change;
  change.seed = 7;
  VarietySpec x = compose_linear(make_builtin_call("rational_normal_curve(7)"), change);
  PolyMatrix jac = jacobian_symbolic(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_symbolic(jac));
  }
}
BENCHMARK(BM_SymbolicRank);

}  // namespace

BENCHMARK_MAIN();
