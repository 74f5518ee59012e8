#pragma once

#include <vector>

#include "terracini/matroid.hpp"
#include "terracini/matroid_union.hpp"
#include "terracini/polytope.hpp"
#include "terracini/variety.hpp"

namespace terracini {

/// How algebraic matroids are computed.  Independence verdicts from sampling
/// are certain (a point rank never exceeds the generic rank); dependence
/// verdicts hold with overwhelming probability and can be re-certified by
/// fraction-free symbolic rank with verify_symbolic.
struct MatroidComputationConfig {
  Sampler sampler;  // mode, seed and trial count
  bool verify_symbolic = false;
  std::uint64_t prime = kDefaultPrime;
  int enumeration_cap = kDefaultEnumerationCap;
  int workers = 1;  // parallel basis checks in union_check; 0 = hardware
};

struct DefectReport {
  int expected_dim = 0;  // min(sum of summand dims, ambient)
  int actual_dim = 0;
  int defect = 0;  // expected - actual, always >= 0
  bool defective = false;
};

/// Algebraic matroid of one parametrized cone.  Toric specs use the exact
/// rational column matroid of the exponent matrix; polynomial maps use the
/// Jacobian at sampled points.
Matroid algebraic_matroid(const VarietySpec& spec, const MatroidComputationConfig& cfg);

/// Matroid of the stacked Jacobian columns of a join (Terracini's lemma);
/// a single summand falls back to algebraic_matroid.
Matroid join_matroid(const JoinSpec& join, const MatroidComputationConfig& cfg);
Matroid secant_matroid(const VarietySpec& spec, int s, const MatroidComputationConfig& cfg);

/// dim X = rank of the algebraic matroid.
int dimension(const VarietySpec& spec, const MatroidComputationConfig& cfg);
int dimension(const JoinSpec& join, const MatroidComputationConfig& cfg);

DefectReport defect(const JoinSpec& join, const MatroidComputationConfig& cfg);

/// Generic rank of the join Jacobian columns restricted to E; equals the
/// dimension of the closure of the projection of the join to E.
int subset_rank(const JoinSpec& join, Mask subset, const MatroidComputationConfig& cfg);

/// Defect of the projected join: summand dimensions are recomputed after the
/// column restriction (not read off a partition).
DefectReport projected_join_defect(const JoinSpec& join, Mask subset,
                                   const MatroidComputationConfig& cfg);

struct MissingBasis {
  Mask basis;            // basis of the union matroid, dependent in the join matroid
  DefectReport witness;  // the projected join is defective exactly then
};

struct UnionCheckReport {
  GroundSet ground;
  int arity = 0;
  int union_rank = 0;
  int join_rank = 0;
  std::size_t union_base_count = 0;
  std::size_t join_base_count = 0;
  bool is_terracini_union = false;
  std::vector<MissingBasis> missing_bases;  // lexicographic
  bool anomaly = false;  // a witness failed to be defective: sampling failure
  DefectReport join_defect;
};

/// Decides the Terracini-union property: enumerates the bases of the matroid
/// union of the summand matroids and tests each for independence in the join
/// matroid; failures are reported with their defective-projection witnesses.
UnionCheckReport union_check(const JoinSpec& join, const MatroidComputationConfig& cfg);

struct SubunionReport {
  std::vector<PartitionCertificate> certificates;  // one per basis of the join matroid
  std::vector<Mask> anomalies;                     // bases that failed to partition
};

/// For every basis of the join matroid, produces a partition into
/// summand-independent parts; existence is guaranteed, so any failure is a
/// sampling anomaly.
SubunionReport subunion_verify(const JoinSpec& join, const MatroidComputationConfig& cfg);

struct ConeAnalysisReport {
  Mask loops = 0;
  Mask coloops = 0;
  int dim = 0;
  int ambient = 0;
  bool has_coloop = false;
  // Filled when a coloop exists: a cone either has a second secant filling
  // the ambient space or is defective.
  int secant2_dim = -1;
  int secant2_expected = -1;
  bool fills_ambient = false;
  bool secant2_defective = false;
  bool dichotomy_holds = true;
};

ConeAnalysisReport cone_analysis(const VarietySpec& spec, const MatroidComputationConfig& cfg);

struct ScanMatchVerdict {
  PatternMatch match;
  bool union_basis = false;     // matched set is a basis of 2M(X)
  bool join_dependent = false;  // and dependent in M(X^{2}): a missing basis
};

struct ScanReport {
  std::vector<ScanMatchVerdict> matches;
  int union_rank = 0;
  int join_rank = 0;
};

/// Scans a point set for translates of a pattern and tests each matched index
/// set against the 2-secant union check of the ambient toric variety.
ScanReport scan_check(const LatticePointSet& points, const LatticePointSet& pattern,
                      const MatroidComputationConfig& cfg);

}  // namespace terracini
