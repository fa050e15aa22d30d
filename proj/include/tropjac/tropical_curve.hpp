#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropjac/divisor.hpp"
#include "tropjac/polarization.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

// A point of a tropical curve: a model vertex, or an interior point of an
// edge at a rational offset measured from the edge's canonical end (the
// half-edge 2e side), so no orientation choice is involved.
struct CurvePoint {
  int vertex = -1;
  int edge = -1;
  Rat offset = 0;

  static CurvePoint at_vertex(int v) { return CurvePoint{v, -1, Rat(0)}; }
  static CurvePoint on_edge(int e, Rat off) { return CurvePoint{-1, e, std::move(off)}; }
  bool is_vertex() const { return edge < 0; }

  bool operator==(const CurvePoint& o) const {
    return vertex == o.vertex && edge == o.edge && offset == o.offset;
  }
  bool operator<(const CurvePoint& o) const {
    if (is_vertex() != o.is_vertex()) return is_vertex();
    if (is_vertex()) return vertex < o.vertex;
    if (edge != o.edge) return edge < o.edge;
    return offset < o.offset;
  }
};

// Metric graph: a model with positive rational edge lengths. Weights and
// legs come from the model.
class TropicalCurve {
 public:
  TropicalCurve() = default;
  TropicalCurve(Graph model, std::vector<Rat> lengths);

  const Graph& model() const { return model_; }
  const Rat& length(int e) const { return lengths_.at(e); }
  const std::vector<Rat>& lengths() const { return lengths_; }
  int genus() const;
  // Validates that the point lies on the curve (offset strictly interior).
  void validate_point(const CurvePoint& p) const;

  bool operator==(const TropicalCurve&) const = default;

 private:
  Graph model_;
  std::vector<Rat> lengths_;
};

// Finitely supported integer map on curve points.
class CurveDivisor {
 public:
  CurveDivisor() = default;
  explicit CurveDivisor(std::vector<std::pair<CurvePoint, long long>> support);

  long long degree() const;
  long long value_at(const CurvePoint& p) const;
  const std::vector<std::pair<CurvePoint, long long>>& support() const { return support_; }
  void add(const CurvePoint& p, long long v);

  CurveDivisor operator+(const CurveDivisor& o) const;
  CurveDivisor operator-(const CurveDivisor& o) const;
  bool operator==(const CurveDivisor&) const = default;

 private:
  std::vector<std::pair<CurvePoint, long long>> support_;  // sorted, nonzero values
};

// Rational weighting of curve points with finite support and fixed degree.
struct CurvePolarization {
  long long degree = 0;
  std::vector<std::pair<CurvePoint, Rat>> values;  // sorted, nonzero
};
CurvePolarization make_curve_polarization(long long degree,
                                          std::vector<std::pair<CurvePoint, Rat>> values);
// Lift a model-vertex polarization onto the curve.
CurvePolarization curve_polarization_from_graph(const Graph& g, const Polarization& mu);

// A refinement of the curve's model whose vertex set contains a prescribed
// point set, with maps back to base coordinates.
struct RefinedModel {
  TropicalCurve curve;                    // refined model with induced lengths
  std::vector<CurvePoint> vertex_point;   // refined vertex -> base point
  std::vector<int> edge_base;             // refined edge -> base edge
  std::vector<Rat> edge_start;            // base offset of the refined edge's u end
  std::vector<int> base_vertex_to_refined;

  // Base point -> refined coordinates; the point must be a refined vertex or
  // lie strictly inside a refined edge.
  CurvePoint to_refined(const CurvePoint& base) const;
  CurvePoint to_base(const CurvePoint& refined) const;
  std::optional<int> vertex_of(const CurvePoint& base) const;
};

RefinedModel refine_at(const TropicalCurve& x, const std::vector<CurvePoint>& points);
// Gamma_{X,D}: vertices are the model's vertices, supp(mu), supp(D) and any
// extra points (such as p0).
RefinedModel model_with_divisor(const TropicalCurve& x, const CurveDivisor& d,
                                const CurvePolarization& mu,
                                const std::vector<CurvePoint>& extra = {});

// Out(Y) for the vertex-induced subcurve of the refined model: the cut
// edges from Y to its complement.
std::vector<int> out_set(const RefinedModel& m, const std::vector<bool>& subcurve);

Rat beta_curve(const RefinedModel& m, const CurvePolarization& mu, const CurveDivisor& d,
               const std::vector<bool>& subcurve);
bool is_quasistable_curve(const TropicalCurve& x, const CurvePoint& p0,
                          const CurvePolarization& mu, const CurveDivisor& d);

// Genus formula check and stability in the pointwise sense.
bool is_stable_curve(const TropicalCurve& x);

struct CurvePointMap {
  Specialization spec;
  CurvePoint map(const CurvePoint& p) const;
};
std::pair<TropicalCurve, CurvePointMap> specialize_curve(const TropicalCurve& x,
                                                         const std::vector<int>& edge_subset);
CurveDivisor pushforward_curve_divisor(const CurvePointMap& m, const CurveDivisor& d);
CurvePolarization pushforward_curve_polarization(const CurvePointMap& m,
                                                 const CurvePolarization& mu);

// The pseudo-divisor on the model induced by a quasistable divisor: one
// interior -1 per subdivided edge, plus its offsets.
struct InducedPseudoDivisor {
  PseudoDivisor pd;                          // on the Gamma_X model graph
  std::vector<std::pair<int, Rat>> offsets;  // per edge of pd.edges: offset of the -1
  Graph model_graph;
};
InducedPseudoDivisor induced_pseudo_divisor(const TropicalCurve& x, const CurvePoint& p0,
                                            const CurvePolarization& mu, const CurveDivisor& d);

// The model whose vertices are the relevant points (base vertices, supp(mu),
// p0) -- the graph carrying the QD poset of the curve.
RefinedModel relevant_model(const TropicalCurve& x, const CurvePoint& p0,
                            const CurvePolarization& mu);
// The polarization on a refined model's graph induced by a curve
// polarization supported on its vertices.
Polarization polarization_on_model(const RefinedModel& m, const CurvePolarization& mu);
Divisor divisor_on_model(const RefinedModel& m, const CurveDivisor& d);

}  // namespace tropjac
