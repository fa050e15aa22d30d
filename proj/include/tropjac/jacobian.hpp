#pragma once

#include <vector>

#include "tropjac/qd_poset.hpp"
#include "tropjac/tropical_curve.hpp"

namespace tropjac {

// Cycle functionals and the period lattice of a curve: a cycle basis from a
// spanning tree of a model, and the length-weighted Gram matrix G. In the
// coordinates "value against each cycle functional", the period lattice is
// the integer column span of G.
struct PeriodData {
  RefinedModel model;
  std::vector<int> tree;                    // kept-edge set
  std::vector<std::vector<int>> cycles;     // per cycle: signed coefficient per model edge
  std::vector<std::vector<Rat>> gram;       // g x g, symmetric positive definite
  std::vector<std::vector<Rat>> path_dot;   // per vertex: <path from p0, cycle_i>
  int base_vertex = 0;
};

PeriodData make_period_data(const RefinedModel& model, int base_vertex,
                            const std::vector<int>* tree = nullptr);

// alpha(D) in the cycle-functional coordinates.
std::vector<Rat> abel_jacobi(const PeriodData& pd, const CurveDivisor& d);
// Difference of Abel-Jacobi images lies in the period lattice?
bool jacobian_equivalent(const PeriodData& pd, const CurveDivisor& a, const CurveDivisor& b);

// One cell per QD poset element; dim = |E|, sides = edge lengths; faces pin
// one coordinate to 0 (toward u) or to the length (toward v).
struct JacobianCell {
  int element = 0;
  std::vector<int> edges;
  std::vector<Rat> side_lengths;
};
struct JacobianFace {
  int cell = 0;
  int subcell = 0;
  int edge = 0;
  int side = 0;
};
struct JacobianComplex {
  TropicalCurve curve;
  RefinedModel model;  // the relevant-point model carrying the poset
  CurvePoint p0;
  QDPoset poset;
  std::vector<JacobianCell> cells;
  std::vector<JacobianFace> faces;
};

JacobianComplex build_jacobian_complex(const TropicalCurve& x, const CurvePoint& p0,
                                       const CurvePolarization& mu);

std::vector<long long> f_vector(const JacobianComplex& c);
long long euler_characteristic(const JacobianComplex& c);

// The divisor parametrized by a cell point: the element's vertex values plus
// one -1 per cell edge at the given offsets (in base coordinates).
CurveDivisor cell_point_divisor(const JacobianComplex& c, int cell,
                                const std::vector<Rat>& offsets);

}  // namespace tropjac
