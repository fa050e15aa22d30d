#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tropjac/jacobian.hpp"
#include "tropjac/qd_poset.hpp"
#include "tropjac/reduction.hpp"
#include "tropjac/universal.hpp"

namespace tropjac::io {

using json = nlohmann::ordered_json;

// Graphs travel with their external ids; internally everything is dense.
struct GraphBundle {
  Graph graph;
  std::vector<int> vertex_ids;  // internal -> external
  std::vector<int> edge_ids;

  int vertex_index(int external_id) const;
  int edge_index(int external_id) const;
};

struct CurveBundle {
  TropicalCurve curve;
  GraphBundle ids;  // ids.graph == curve.model()
};

json parse(const std::string& text);

GraphBundle graph_from_json(const json& j);
json graph_to_json(const GraphBundle& b);
GraphBundle bundle_with_dense_ids(const Graph& g);

Divisor divisor_from_json(const json& j, const GraphBundle& b);
json divisor_to_json(const Divisor& d, const GraphBundle& b);

PseudoDivisor pseudo_divisor_from_json(const json& j, const GraphBundle& b);
json pseudo_divisor_to_json(const PseudoDivisor& pd, const GraphBundle& b);

Polarization polarization_from_json(const json& j, const GraphBundle& b);
json polarization_to_json(const Polarization& mu, const GraphBundle& b);

CurveBundle curve_from_json(const json& j);
json curve_to_json(const CurveBundle& b);

CurveDivisor curve_divisor_from_json(const json& j, const CurveBundle& b);
json curve_divisor_to_json(const CurveDivisor& d, const CurveBundle& b);

json trace_to_json(const TropicalReduction& r, const CurveBundle& b);
json poset_to_json(const QDPoset& p, const GraphBundle& b);
std::string poset_to_dot(const QDPoset& p, const GraphBundle& b);
json jacobian_to_json(const JacobianComplex& c);
std::string jacobian_dual_dot(const JacobianComplex& c);
json catalog_to_json(const StableGraphCatalog& cat);
json universal_to_json(const UniversalQD& u, const UniversalReport& rep);

}  // namespace tropjac::io
