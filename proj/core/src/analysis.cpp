#include "terracini/analysis.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "terracini/parallel.hpp"

namespace terracini {

namespace {

RationalMatrix to_rational(const ExponentMatrix& a) {
  RationalMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rational(static_cast<long>(a(i, j)));
  return m;
}

// Sampled Jacobian matroid with optional symbolic re-certification of
// dependence verdicts (independence never needs re-checking: a point rank is
// at most the generic rank).
Matroid sampled_matroid(std::vector<FpMatrix> samples, const PrimeField& field, GroundSet ground,
                        bool verify_symbolic, std::function<PolyMatrix()> symbolic) {
  if (!verify_symbolic) return Matroid::linear_mod_p(std::move(samples), field, std::move(ground));
  auto sym = std::make_shared<PolyMatrix>(symbolic());
  auto oracle = [samples = std::move(samples), field, sym](Mask s) {
    auto idx = indices_of(s);
    std::size_t best = 0;
    for (const auto& m : samples) best = std::max(best, rank_mod_p(select_columns(m, idx), field));
    if (best < idx.size()) best = std::max(best, rank_symbolic(select_columns(*sym, idx)));
    return static_cast<int>(best);
  };
  return Matroid(std::move(ground), std::move(oracle), Provenance::Jacobian);
}

std::vector<FpMatrix> join_samples(const JoinSpec& join, const MatroidComputationConfig& cfg,
                                   const PrimeField& field) {
  int trials = std::max(1, cfg.sampler.trials);
  std::vector<FpMatrix> samples;
  samples.reserve(trials);
  for (int t = 0; t < trials; ++t)
    samples.push_back(join_jacobian_at(join, sample_points(cfg.sampler, join, t, field), field));
  return samples;
}

DefectReport make_defect(int expected, int actual) {
  DefectReport r;
  r.expected_dim = expected;
  r.actual_dim = actual;
  r.defect = expected - actual;
  r.defective = r.defect > 0;
  return r;
}

DefectReport projected_defect_with(const std::vector<Matroid>& summands, const Matroid& join_m,
                                   Mask subset) {
  int total = 0;
  for (const auto& m : summands) total += m.rank(subset);
  int expected = std::min(total, subset_size(subset));
  return make_defect(expected, join_m.rank(subset));
}

}  // namespace

Matroid algebraic_matroid(const VarietySpec& spec, const MatroidComputationConfig& cfg) {
  if (const auto* t = std::get_if<ToricSpec>(&spec)) {
    // Exact and deterministic: the algebraic matroid of a toric cone is the
    // column matroid of its (homogenized) exponent matrix over Q.
    return Matroid::column_matroid(to_rational(t->effective_exponents()), t->labels);
  }
  PrimeField field(cfg.prime);
  JoinSpec single = JoinSpec::of({spec});
  return sampled_matroid(join_samples(single, cfg, field), field, spec_labels(spec),
                         cfg.verify_symbolic, [&spec] { return jacobian_symbolic(spec); });
}

Matroid join_matroid(const JoinSpec& join, const MatroidComputationConfig& cfg) {
  if (join.arity() == 1) return algebraic_matroid(join.summands[0], cfg);
  PrimeField field(cfg.prime);
  return sampled_matroid(join_samples(join, cfg, field), field, join.labels(),
                         cfg.verify_symbolic, [&join] { return join_jacobian_symbolic(join); });
}

Matroid secant_matroid(const VarietySpec& spec, int s, const MatroidComputationConfig& cfg) {
  return join_matroid(JoinSpec::secant(spec, s), cfg);
}

int dimension(const VarietySpec& spec, const MatroidComputationConfig& cfg) {
  return algebraic_matroid(spec, cfg).rank();
}

int dimension(const JoinSpec& join, const MatroidComputationConfig& cfg) {
  return join_matroid(join, cfg).rank();
}

DefectReport defect(const JoinSpec& join, const MatroidComputationConfig& cfg) {
  int total = 0;
  for (const auto& s : join.summands) total += dimension(s, cfg);
  int expected = std::min(total, join.coordinate_count());
  return make_defect(expected, dimension(join, cfg));
}

int subset_rank(const JoinSpec& join, Mask subset, const MatroidComputationConfig& cfg) {
  return join_matroid(join, cfg).rank(subset);
}

DefectReport projected_join_defect(const JoinSpec& join, Mask subset,
                                   const MatroidComputationConfig& cfg) {
  if (subset == 0) throw std::invalid_argument("projected join defect needs a nonempty subset");
  std::vector<Matroid> summands;
  summands.reserve(join.arity());
  for (const auto& s : join.summands) summands.push_back(algebraic_matroid(s, cfg));
  return projected_defect_with(summands, join_matroid(join, cfg), subset);
}

UnionCheckReport union_check(const JoinSpec& join, const MatroidComputationConfig& cfg) {
  UnionCheckReport report;
  report.ground = join.labels();
  report.arity = join.arity();

  std::vector<Matroid> summands;
  summands.reserve(join.arity());
  for (const auto& s : join.summands) summands.push_back(algebraic_matroid(s, cfg));
  Matroid union_m = matroid_union(summands);
  Matroid join_m = join_matroid(join, cfg);

  report.union_rank = union_m.rank();
  report.join_rank = join_m.rank();
  std::vector<Mask> union_bases = union_m.bases(cfg.enumeration_cap);
  report.union_base_count = union_bases.size();
  report.join_base_count = join_m.bases(cfg.enumeration_cap).size();
  report.join_defect = projected_defect_with(summands, join_m, full_mask(report.ground.size()));

  std::vector<char> independent(union_bases.size(), 0);
  parallel_for(union_bases.size(), cfg.workers,
               [&](std::size_t i) { independent[i] = join_m.is_independent(union_bases[i]); });

  for (std::size_t i = 0; i < union_bases.size(); ++i) {
    if (independent[i]) continue;
    MissingBasis mb;
    mb.basis = union_bases[i];
    mb.witness = projected_defect_with(summands, join_m, union_bases[i]);
    if (!mb.witness.defective) report.anomaly = true;
    report.missing_bases.push_back(std::move(mb));
  }
  report.is_terracini_union = report.missing_bases.empty();
  return report;
}

SubunionReport subunion_verify(const JoinSpec& join, const MatroidComputationConfig& cfg) {
  std::vector<Matroid> summands;
  summands.reserve(join.arity());
  for (const auto& s : join.summands) summands.push_back(algebraic_matroid(s, cfg));
  Matroid join_m = join_matroid(join, cfg);

  SubunionReport report;
  for (Mask basis : join_m.bases(cfg.enumeration_cap)) {
    PartitionOutcome outcome = matroid_partition(summands, basis);
    if (outcome.certificate)
      report.certificates.push_back(std::move(*outcome.certificate));
    else
      report.anomalies.push_back(basis);
  }
  return report;
}

ConeAnalysisReport cone_analysis(const VarietySpec& spec, const MatroidComputationConfig& cfg) {
  ConeAnalysisReport report;
  Matroid m = algebraic_matroid(spec, cfg);
  report.loops = m.loops();
  report.coloops = m.coloops();
  report.dim = m.rank();
  report.ambient = m.size();
  report.has_coloop = report.coloops != 0;
  if (report.has_coloop) {
    report.secant2_dim = dimension(JoinSpec::secant(spec, 2), cfg);
    report.secant2_expected = std::min(2 * report.dim, report.ambient);
    report.fills_ambient = report.secant2_dim == report.ambient;
    report.secant2_defective = report.secant2_dim < report.secant2_expected;
    report.dichotomy_holds = report.fills_ambient || report.secant2_defective;
  }
  return report;
}

ScanReport scan_check(const LatticePointSet& points, const LatticePointSet& pattern,
                      const MatroidComputationConfig& cfg) {
  ToricSpec spec = toric_from_points(points);
  JoinSpec secant = JoinSpec::secant(spec, 2);
  Matroid base_m = algebraic_matroid(spec, cfg);
  Matroid union_m = self_union(base_m, 2);
  Matroid join_m = join_matroid(secant, cfg);

  ScanReport report;
  report.union_rank = union_m.rank();
  report.join_rank = join_m.rank();
  for (PatternMatch& match : scan_pattern(points, pattern)) {
    ScanMatchVerdict v;
    Mask s = mask_from_indices(match.indices);
    v.union_basis = union_m.is_basis(s);
    v.join_dependent = !join_m.is_independent(s);
    v.match = std::move(match);
    report.matches.push_back(std::move(v));
  }
  return report;
}

}  // namespace terracini
