#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/matroid.hpp"
#include "terracini/polynomial.hpp"

namespace terracini {

using ExponentMatrix = Matrix<long long>;

/// Monomial parametrization of a toric cone: column i of the exponent matrix
/// is the exponent vector of coordinate i.  With homogenize set, a row of
/// ones is appended so the spec always describes an affine cone.  Negative
/// exponents (Laurent monomials) are allowed; Jacobians only need nonzero
/// parameters.
struct ToricSpec {
  ExponentMatrix exponents;  // d x N
  bool homogenize = true;
  GroundSet labels;          // N labels

  int coordinate_count() const { return static_cast<int>(exponents.cols()); }
  int param_count() const { return static_cast<int>(exponents.rows()) + (homogenize ? 1 : 0); }
  /// Exponent matrix with the homogenization row appended (when enabled).
  ExponentMatrix effective_exponents() const;
  /// Duplicate columns are allowed but force parallel elements.
  bool has_duplicate_columns() const;
};

/// Polynomial parametrization: N coordinate functions in m parameters.
struct PolyMapSpec {
  std::vector<std::string> param_names;
  std::vector<SparsePolynomial> components;  // N of them, all in m variables
  GroundSet labels;

  int coordinate_count() const { return static_cast<int>(components.size()); }
  int param_count() const { return static_cast<int>(param_names.size()); }
};

using VarietySpec = std::variant<ToricSpec, PolyMapSpec>;

int spec_param_count(const VarietySpec& spec);
int spec_coordinate_count(const VarietySpec& spec);
const GroundSet& spec_labels(const VarietySpec& spec);

ToricSpec make_toric(std::vector<std::vector<long long>> exponent_rows, bool homogenize = true,
                     GroundSet labels = {});
PolyMapSpec make_polymap(std::vector<std::string> param_names,
                         std::vector<SparsePolynomial> components, GroundSet labels = {});
/// Components given as expression strings over the named parameters.
PolyMapSpec make_polymap(std::vector<std::string> param_names,
                         const std::vector<std::string>& component_exprs, GroundSet labels = {});

/// Join of affine cones sharing one ambient coordinate set; a secant is the
/// all-equal case.
struct JoinSpec {
  std::vector<VarietySpec> summands;  // s >= 1

  int arity() const { return static_cast<int>(summands.size()); }
  const GroundSet& labels() const { return spec_labels(summands.at(0)); }
  int coordinate_count() const { return labels().size(); }

  static JoinSpec of(std::vector<VarietySpec> summands);
  static JoinSpec secant(VarietySpec spec, int s);
};

/// Linear coordinate change, either an explicit invertible rational matrix or
/// a seed for a pseudorandom invertible integer matrix with entries in
/// [-magnitude, magnitude].
struct LinearChangeSpec {
  std::optional<RationalMatrix> matrix;
  std::optional<std::uint64_t> seed;
  int magnitude = 10;
};

RationalMatrix random_invertible_matrix(int n, std::uint64_t seed, int magnitude = 10);

/// Monomial coordinates expanded to polynomials (the homogenizing variable,
/// when present, becomes a parameter of the expanded map).
PolyMapSpec expand_to_polymap(const VarietySpec& spec);

/// Coordinate functions replaced by their images under the linear change.
PolyMapSpec compose_linear(const VarietySpec& spec, const LinearChangeSpec& change);

/// Point source for Jacobian sampling.  Generic mode draws uniform nonzero
/// field elements; subgroup mode uses one-parameter subgroups of the torus
/// (parameter j of summand k gets base^directions[k][j]); explicit mode
/// echoes user-supplied points.
struct Sampler {
  enum class Mode { Generic, Subgroup, Explicit };
  Mode mode = Mode::Generic;
  std::uint64_t seed = 0;
  int trials = 3;
  std::vector<std::vector<long long>> directions;       // per summand, subgroup mode
  long long base = 2;                                   // subgroup mode
  std::vector<std::vector<long long>> explicit_points;  // per summand, explicit mode
};

using ParamPoint = std::vector<PrimeField::Element>;

/// One parameter vector per summand; a deterministic function of
/// (seed, trial).
std::vector<ParamPoint> sample_points(const Sampler& sampler, const JoinSpec& join, int trial,
                                      const PrimeField& field);

/// (params x N) matrix of partials of the coordinate functions at the point.
/// Its columns span the coordinate differentials on the tangent space, so its
/// column matroid at a generic point is the algebraic matroid.
FpMatrix jacobian_at(const VarietySpec& spec, std::span<const PrimeField::Element> point,
                     const PrimeField& field);

/// Vertical stack of per-summand Jacobians (Terracini: the tangent space of a
/// join at a generic point is the sum of the summand tangent spaces).
FpMatrix join_jacobian_at(const JoinSpec& join, const std::vector<ParamPoint>& points,
                          const PrimeField& field);

/// Jacobian over the rational function field; for toric specs rows and
/// columns are rescaled by monomials to clear denominators, which leaves the
/// column matroid unchanged.
PolyMatrix jacobian_symbolic(const VarietySpec& spec);

/// Stacked symbolic Jacobian with disjoint parameter variables per summand.
PolyMatrix join_jacobian_symbolic(const JoinSpec& join);

/// Parses the JSON spec schema: toric | polymap | linchange | join | secant |
/// builtin.  Single varieties come back as one-summand joins.
JoinSpec parse_spec_json(const std::string& text);

}  // namespace terracini
