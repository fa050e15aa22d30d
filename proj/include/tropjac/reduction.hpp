#pragma once

#include <vector>

#include "tropjac/jacobian.hpp"
#include "tropjac/quasistability.hpp"
#include "tropjac/tropical_curve.hpp"

namespace tropjac {

// The principal divisor moving one chip distance ell outward along every
// edge leaving the subcurve (a vertex subset of the given model).
CurveDivisor chip_firing_divisor(const RefinedModel& m, const std::vector<bool>& subcurve,
                                 const Rat& ell);

// The unique quasistable divisor equivalent to d, by enumeration plus the
// lattice certificate.
Divisor reduce_graph(const Graph& g, int v0, const Polarization& mu, const Divisor& d);

struct TraceStep {
  std::vector<CurvePoint> fired_subcurve;  // model vertices of Y, base coordinates
  Rat ell;
  CurveDivisor fired;
  Rat beta_min;    // beta of the fired subcurve
  long long rel;   // relevant points outside the fired subcurve
};
struct TropicalReduction {
  CurveDivisor divisor;
  std::vector<TraceStep> trace;
};
struct TropicalReductionOptions {
  long long max_iterations = 0;  // 0: derive from edge count and denominators
};

// Iterative chip-firing reduction on a tropical curve. The model is
// refreshed to the relevant points of the running divisor each round; the
// trace's (beta_min, -rel) pairs strictly increase lexicographically.
TropicalReduction reduce_tropical(const TropicalCurve& x, const CurvePoint& p0,
                                  const CurvePolarization& mu, const CurveDivisor& d,
                                  const TropicalReductionOptions& opts = {});

// Equality of divisor classes through the Abel-Jacobi lattice test.
bool tropical_equivalent(const TropicalCurve& x, const CurveDivisor& a, const CurveDivisor& b);

}  // namespace tropjac
