#include "tropjac/reduction.hpp"

#include <algorithm>
#include <string>

namespace tropjac {

CurveDivisor chip_firing_divisor(const RefinedModel& m, const std::vector<bool>& subcurve,
                                 const Rat& ell) {
  if (ell <= 0) throw ValidationError("chip-firing length must be positive");
  const Graph& g = m.curve.model();
  std::vector<int> out = out_set(m, subcurve);
  for (int e : out)
    if (ell > m.curve.length(e))
      throw ValidationError("chip-firing length exceeds an outgoing edge");

  CurveDivisor d;
  for (int e : out) {
    auto ed = g.edge(e);
    int from = subcurve[ed.u] ? ed.u : ed.v;  // attachment point on Y
    int to = subcurve[ed.u] ? ed.v : ed.u;
    d.add(m.to_base(CurvePoint::at_vertex(from)), -1);
    if (ell == m.curve.length(e)) {
      d.add(m.to_base(CurvePoint::at_vertex(to)), 1);
    } else {
      Rat offset = (from == ed.u) ? ell : m.curve.length(e) - ell;
      d.add(m.to_base(CurvePoint::on_edge(e, offset)), 1);
    }
  }
  return d;
}

Divisor reduce_graph(const Graph& g, int v0, const Polarization& mu, const Divisor& d) {
  validate_divisor(g, d);
  if (d.degree() != mu.degree)
    throw ValidationError("reduce: divisor degree does not match the polarization");
  auto candidates = enumerate_quasistable_divisors(g, v0, mu);
  LatticeBasis lattice(laplacian(g));
  std::vector<Divisor> matches;
  for (const Divisor& c : candidates) {
    Divisor diff = c - d;
    std::vector<Int> b(diff.size());
    for (int i = 0; i < diff.size(); ++i) b[i] = int_of(diff[i]);
    if (lattice.contains(b)) matches.push_back(c);
  }
  if (matches.size() != 1)
    throw InternalConsistencyError("expected exactly one quasistable divisor in the class, found " +
                                   std::to_string(matches.size()));
  return matches[0];
}

namespace {

Int input_denominator_lcm(const TropicalCurve& x, const CurvePoint& p0,
                          const CurvePolarization& mu, const CurveDivisor& d) {
  std::vector<Rat> vals = x.lengths();
  if (!p0.is_vertex()) vals.push_back(p0.offset);
  for (const auto& [p, v] : mu.values)
    if (!p.is_vertex()) vals.push_back(p.offset);
  for (const auto& [p, v] : d.support())
    if (!p.is_vertex()) vals.push_back(p.offset);
  return lcm_denominators(vals);
}

void check_denominators(const RefinedModel& m, const Int& lcm) {
  for (const Rat& l : m.curve.lengths())
    if (lcm % l.get_den() != 0)
      throw InternalConsistencyError("reduction produced a denominator outside the input lattice");
}

}  // namespace

TropicalReduction reduce_tropical(const TropicalCurve& x, const CurvePoint& p0,
                                  const CurvePolarization& mu, const CurveDivisor& dd,
                                  const TropicalReductionOptions& opts) {
  x.validate_point(p0);
  if (dd.degree() != mu.degree)
    throw ValidationError("reduce: divisor degree does not match the polarization");

  Int denom_lcm = input_denominator_lcm(x, p0, mu, dd);
  Int cap = opts.max_iterations > 0
                ? Int(static_cast<long>(opts.max_iterations))
                : 10 * Int(x.model().num_edges() + 1 +
                           static_cast<int>(dd.support().size())) * denom_lcm;

  TropicalReduction result;
  result.divisor = dd;
  Int iterations = 0;
  bool have_prev = false;
  Rat prev_beta;
  long long prev_rel = 0;

  while (true) {
    if (iterations > cap)
      throw InternalConsistencyError("tropical reduction exceeded its iteration cap");
    ++iterations;

    RefinedModel m = model_with_divisor(x, result.divisor, mu, {p0});
    check_denominators(m, denom_lcm);
    const Graph& g = m.curve.model();
    Polarization gmu = polarization_on_model(m, mu);
    Divisor gd = divisor_on_model(m, result.divisor);
    int v0 = *m.vertex_of(p0);

    std::vector<int> fire_subset;
    Rat fire_beta;
    BetaMinimum overall = beta_minimum(g, v0, gmu, gd, MinimizerConstraint::AllSubsets);
    if (overall.value < 0) {
      fire_subset = overall.minimal_subset;
      fire_beta = overall.value;
    } else {
      if (g.num_vertices() == 1) break;  // no proper subcurve through p0 exists
      BetaMinimum at_p0 = beta_minimum(g, v0, gmu, gd, MinimizerConstraint::ContainingV0Proper);
      if (at_p0.value < 0)
        throw InternalConsistencyError("semistable divisor with a negative beta subset");
      if (at_p0.value > 0) break;  // quasistable
      if (!at_p0.unique_minimal)
        throw InternalConsistencyError("no minimal zero-beta subcurve through the base point");
      fire_subset = at_p0.minimal_subset;
      fire_beta = at_p0.value;
    }

    std::vector<bool> y(g.num_vertices(), false);
    for (int v : fire_subset) y[v] = true;
    std::vector<int> out = out_set(m, y);
    if (out.empty())
      throw InternalConsistencyError("firing subcurve has an empty outgoing cut");
    Rat ell = m.curve.length(out[0]);
    for (int e : out) ell = std::min(ell, m.curve.length(e));

    CurveDivisor fired = chip_firing_divisor(m, y, ell);
    result.divisor = result.divisor - fired;

    long long rel = static_cast<long long>(g.num_vertices() - fire_subset.size());
    if (have_prev) {
      bool progress = fire_beta > prev_beta || (fire_beta == prev_beta && rel < prev_rel);
      if (!progress)
        throw InternalConsistencyError("reduction progress measure failed to increase");
    }
    have_prev = true;
    prev_beta = fire_beta;
    prev_rel = rel;

    TraceStep step;
    for (int v : fire_subset) step.fired_subcurve.push_back(m.to_base(CurvePoint::at_vertex(v)));
    step.ell = ell;
    step.fired = fired;
    step.beta_min = fire_beta;
    step.rel = rel;
    result.trace.push_back(std::move(step));
  }

  if (!is_quasistable_curve(x, p0, mu, result.divisor))
    throw InternalConsistencyError("tropical reduction returned a non-quasistable divisor");
  return result;
}

bool tropical_equivalent(const TropicalCurve& x, const CurveDivisor& a, const CurveDivisor& b) {
  if (a.degree() != b.degree())
    throw ValidationError("tropical equivalence requires equal degrees");
  PeriodData pd = make_period_data(refine_at(x, {}), 0);
  return jacobian_equivalent(pd, a, b);
}

}  // namespace tropjac
