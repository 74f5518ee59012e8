#include "terracini/variety.hpp"

#include <algorithm>

#include "terracini/rng.hpp"

namespace terracini {

ExponentMatrix ToricSpec::effective_exponents() const {
  if (!homogenize) return exponents;
  ExponentMatrix m(exponents.rows() + 1, exponents.cols());
  for (std::size_t i = 0; i < exponents.rows(); ++i)
    for (std::size_t j = 0; j < exponents.cols(); ++j) m(i, j) = exponents(i, j);
  for (std::size_t j = 0; j < exponents.cols(); ++j) m(exponents.rows(), j) = 1;
  return m;
}

bool ToricSpec::has_duplicate_columns() const {
  ExponentMatrix m = effective_exponents();
  for (std::size_t a = 0; a < m.cols(); ++a)
    for (std::size_t b = a + 1; b < m.cols(); ++b) {
      bool eq = true;
      for (std::size_t i = 0; i < m.rows() && eq; ++i) eq = m(i, a) == m(i, b);
      if (eq) return true;
    }
  return false;
}

int spec_param_count(const VarietySpec& spec) {
  return std::visit([](const auto& s) { return s.param_count(); }, spec);
}

int spec_coordinate_count(const VarietySpec& spec) {
  return std::visit([](const auto& s) { return s.coordinate_count(); }, spec);
}

const GroundSet& spec_labels(const VarietySpec& spec) {
  return std::visit([](const auto& s) -> const GroundSet& { return s.labels; }, spec);
}

ToricSpec make_toric(std::vector<std::vector<long long>> exponent_rows, bool homogenize,
                     GroundSet labels) {
  ToricSpec spec;
  spec.exponents = ExponentMatrix::from_rows(exponent_rows);
  spec.homogenize = homogenize;
  if (labels.size() == 0) labels = GroundSet::numbered(spec.coordinate_count());
  if (labels.size() != spec.coordinate_count())
    throw std::invalid_argument("toric spec: label count does not match column count");
  spec.labels = std::move(labels);
  return spec;
}

PolyMapSpec make_polymap(std::vector<std::string> param_names,
                         std::vector<SparsePolynomial> components, GroundSet labels) {
  PolyMapSpec spec;
  int m = static_cast<int>(param_names.size());
  bool any_nonzero = false;
  for (const auto& c : components) {
    if (c.variable_count() != m)
      throw std::invalid_argument("polymap component has wrong variable count");
    any_nonzero = any_nonzero || !c.is_zero();
  }
  if (components.empty() || !any_nonzero)
    throw std::invalid_argument("polymap needs at least one nonzero component");
  spec.param_names = std::move(param_names);
  spec.components = std::move(components);
  if (labels.size() == 0) labels = GroundSet::numbered(spec.coordinate_count());
  if (labels.size() != spec.coordinate_count())
    throw std::invalid_argument("polymap: label count does not match component count");
  spec.labels = std::move(labels);
  return spec;
}

PolyMapSpec make_polymap(std::vector<std::string> param_names,
                         const std::vector<std::string>& component_exprs, GroundSet labels) {
  std::vector<SparsePolynomial> comps;
  comps.reserve(component_exprs.size());
  for (const auto& e : component_exprs) comps.push_back(parse_poly(e, param_names));
  return make_polymap(std::move(param_names), std::move(comps), std::move(labels));
}

JoinSpec JoinSpec::of(std::vector<VarietySpec> summands) {
  if (summands.empty()) throw std::invalid_argument("join needs at least one summand");
  const GroundSet& g = spec_labels(summands[0]);
  for (const auto& s : summands)
    if (!(spec_labels(s) == g))
      throw std::invalid_argument("join summands must share one ambient coordinate set");
  JoinSpec j;
  j.summands = std::move(summands);
  return j;
}

JoinSpec JoinSpec::secant(VarietySpec spec, int s) {
  if (s < 1) throw std::invalid_argument("secant order must be at least 1");
  std::vector<VarietySpec> summands(s, spec);
  return of(std::move(summands));
}

RationalMatrix random_invertible_matrix(int n, std::uint64_t seed, int magnitude) {
  if (magnitude < 1) throw std::invalid_argument("magnitude must be positive");
  SplitMix64 g(derive_stream(seed, 0x11c4));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = Rational(static_cast<long>(g.below(2 * magnitude + 1)) - magnitude);
    if (rank_rational(m) == static_cast<std::size_t>(n)) return m;
  }
  throw std::runtime_error("failed to draw an invertible matrix");
}

PolyMapSpec expand_to_polymap(const VarietySpec& spec) {
  if (std::holds_alternative<PolyMapSpec>(spec)) return std::get<PolyMapSpec>(spec);
  const ToricSpec& t = std::get<ToricSpec>(spec);
  ExponentMatrix a = t.effective_exponents();
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::vector<std::string> params;
  for (int j = 0; j < static_cast<int>(t.exponents.rows()); ++j)
    params.push_back("t" + std::to_string(j + 1));
  if (t.homogenize) params.push_back("u");
  std::vector<SparsePolynomial> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) {
    SparsePolynomial::Exponents e(m);
    for (int j = 0; j < m; ++j) {
      if (a(j, i) < 0)
        throw std::invalid_argument("cannot expand Laurent monomials to a polynomial map");
      e[j] = static_cast<int>(a(j, i));
    }
    comps.push_back(SparsePolynomial::monomial(m, e, Rational(1)));
  }
  return make_polymap(std::move(params), std::move(comps), t.labels);
}

PolyMapSpec compose_linear(const VarietySpec& spec, const LinearChangeSpec& change) {
  PolyMapSpec base = expand_to_polymap(spec);
  const int n = base.coordinate_count();
  RationalMatrix c;
  if (change.matrix) {
    c = *change.matrix;
    if (c.rows() != static_cast<std::size_t>(n) || c.cols() != static_cast<std::size_t>(n))
      throw std::invalid_argument("linear change matrix has wrong shape");
    if (rank_rational(c) != static_cast<std::size_t>(n))
      throw std::invalid_argument("linear change matrix is singular");
  } else if (change.seed) {
    c = random_invertible_matrix(n, *change.seed, change.magnitude);
  } else {
    throw std::invalid_argument("linear change needs a matrix or a seed");
  }
  std::vector<SparsePolynomial> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) {
    SparsePolynomial acc(base.param_count());
    for (int j = 0; j < n; ++j)
      if (c(i, j) != 0) acc = acc + base.components[j].scaled(c(i, j));
    comps.push_back(std::move(acc));
  }
  return make_polymap(base.param_names, std::move(comps), base.labels);
}

namespace {

PrimeField::Element power_signed(const PrimeField& field, PrimeField::Element t, long long e) {
  if (e >= 0) return field.pow(t, static_cast<std::uint64_t>(e));
  return field.pow(field.inv(t), static_cast<std::uint64_t>(-e));
}

ParamPoint subgroup_point(const VarietySpec& spec, std::span<const long long> direction,
                          long long base, const PrimeField& field) {
  const bool toric = std::holds_alternative<ToricSpec>(spec);
  const int torus_params =
      toric ? static_cast<int>(std::get<ToricSpec>(spec).exponents.rows()) : spec_param_count(spec);
  if (static_cast<int>(direction.size()) != torus_params)
    throw std::invalid_argument("subgroup direction vector has wrong length");
  PrimeField::Element a = field.from_int(base);
  if (a == 0) throw std::invalid_argument("subgroup base reduces to zero");
  ParamPoint p;
  p.reserve(spec_param_count(spec));
  for (long long v : direction) p.push_back(power_signed(field, a, v));
  if (toric && std::get<ToricSpec>(spec).homogenize) p.push_back(1);
  return p;
}

}  // namespace

std::vector<ParamPoint> sample_points(const Sampler& sampler, const JoinSpec& join, int trial,
                                      const PrimeField& field) {
  const int s = join.arity();
  std::vector<ParamPoint> out;
  out.reserve(s);
  switch (sampler.mode) {
    case Sampler::Mode::Generic: {
      SplitMix64 g(derive_stream(sampler.seed, static_cast<std::uint64_t>(trial)));
      for (int k = 0; k < s; ++k) {
        int m = spec_param_count(join.summands[k]);
        ParamPoint p(m);
        for (int j = 0; j < m; ++j) p[j] = 1 + g.below(field.modulus() - 1);
        out.push_back(std::move(p));
      }
      return out;
    }
    case Sampler::Mode::Subgroup: {
      if (static_cast<int>(sampler.directions.size()) != s)
        throw std::invalid_argument("subgroup sampler needs one direction vector per summand");
      for (int k = 0; k < s; ++k)
        out.push_back(subgroup_point(join.summands[k], sampler.directions[k], sampler.base, field));
      return out;
    }
    case Sampler::Mode::Explicit: {
      if (static_cast<int>(sampler.explicit_points.size()) != s)
        throw std::invalid_argument("explicit sampler needs one point per summand");
      for (int k = 0; k < s; ++k) {
        const auto& raw = sampler.explicit_points[k];
        if (static_cast<int>(raw.size()) != spec_param_count(join.summands[k]))
          throw std::invalid_argument("explicit point has wrong length");
        ParamPoint p;
        p.reserve(raw.size());
        for (long long v : raw) p.push_back(field.from_int(v));
        out.push_back(std::move(p));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable sampler mode");
}

FpMatrix jacobian_at(const VarietySpec& spec, std::span<const PrimeField::Element> point,
                     const PrimeField& field) {
  if (static_cast<int>(point.size()) != spec_param_count(spec))
    throw std::invalid_argument("jacobian point has wrong length");
  if (const auto* t = std::get_if<ToricSpec>(&spec)) {
    ExponentMatrix a = t->effective_exponents();
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<PrimeField::Element> inv_t(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (point[j] == 0)
        throw std::invalid_argument("toric Jacobian needs nonzero parameter values");
      inv_t[j] = field.inv(point[j]);
    }
    FpMatrix jac(m, n);
    for (std::size_t i = 0; i < n; ++i) {
      PrimeField::Element mono = 1;
      for (std::size_t j = 0; j < m; ++j) mono = field.mul(mono, power_signed(field, point[j], a(j, i)));
      for (std::size_t j = 0; j < m; ++j) {
        // entry (j, i) = A(j,i) * t^{a_i} / t_j
        PrimeField::Element coeff = field.from_int(a(j, i));
        jac(j, i) = field.mul(coeff, field.mul(mono, inv_t[j]));
      }
    }
    return jac;
  }
  const PolyMapSpec& pm = std::get<PolyMapSpec>(spec);
  const std::size_t m = pm.param_count(), n = pm.coordinate_count();
  FpMatrix jac(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      jac(j, i) = pm.components[i].partial(static_cast<int>(j)).eval_mod_p(point, field);
  return jac;
}

FpMatrix join_jacobian_at(const JoinSpec& join, const std::vector<ParamPoint>& points,
                          const PrimeField& field) {
  if (static_cast<int>(points.size()) != join.arity())
    throw std::invalid_argument("join Jacobian needs one point per summand");
  FpMatrix stacked(0, join.coordinate_count());
  for (int k = 0; k < join.arity(); ++k)
    stacked = vstack(stacked, jacobian_at(join.summands[k], points[k], field));
  return stacked;
}

PolyMatrix jacobian_symbolic(const VarietySpec& spec) {
  if (const auto* t = std::get_if<ToricSpec>(&spec)) {
    // Row j is scaled by t_j and column i by the monomial clearing its
    // negative exponents; both are invertible over Q(t), so the column
    // matroid is that of the honest Jacobian.
    ExponentMatrix a = t->effective_exponents();
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    PolyMatrix jac(m, n, SparsePolynomial(m));
    for (int i = 0; i < n; ++i) {
      SparsePolynomial::Exponents shift(m, 0);
      for (int j = 0; j < m; ++j) shift[j] = static_cast<int>(std::max(0LL, -a(j, i)));
      for (int j = 0; j < m; ++j) {
        if (a(j, i) == 0) continue;
        SparsePolynomial::Exponents e(m);
        for (int k = 0; k < m; ++k) e[k] = static_cast<int>(a(k, i)) + shift[k];
        jac(j, i) = SparsePolynomial::monomial(m, e, Rational(static_cast<long>(a(j, i))));
      }
    }
    return jac;
  }
  const PolyMapSpec& pm = std::get<PolyMapSpec>(spec);
  const int m = pm.param_count(), n = pm.coordinate_count();
  PolyMatrix jac(m, n, SparsePolynomial(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) jac(j, i) = pm.components[i].partial(j);
  return jac;
}

PolyMatrix join_jacobian_symbolic(const JoinSpec& join) {
  int total = 0;
  for (const auto& s : join.summands) total += spec_param_count(s);
  PolyMatrix stacked(0, join.coordinate_count());
  int offset = 0;
  for (const auto& s : join.summands) {
    PolyMatrix jac = jacobian_symbolic(s);
    PolyMatrix wide(jac.rows(), jac.cols(), SparsePolynomial(total));
    for (std::size_t i = 0; i < jac.rows(); ++i)
      for (std::size_t j = 0; j < jac.cols(); ++j) wide(i, j) = jac(i, j).reindexed(total, offset);
    stacked = vstack(stacked, wide);
    offset += spec_param_count(s);
  }
  return stacked;
}

}  // namespace terracini
