#include "tropjac/tropical_curve.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tropjac/quasistability.hpp"

namespace tropjac {

TropicalCurve::TropicalCurve(Graph model, std::vector<Rat> lengths)
    : model_(std::move(model)), lengths_(std::move(lengths)) {
  if (static_cast<int>(lengths_.size()) != model_.num_edges())
    throw ValidationError("length function does not match the edge set");
  for (const Rat& l : lengths_)
    if (l <= 0) throw ValidationError("edge lengths must be positive");
  if (!model_.is_connected()) throw ValidationError("tropical curves must be connected");
  // 2g - 2 = sum over points of (2w(p) - 2 + delta_p) must recover the
  // model's genus; this is an identity, so any failure is a bug.
  long long rhs = 0;
  for (int v = 0; v < model_.num_vertices(); ++v)
    rhs += 2 * model_.weight(v) - 2 + valence(model_, v);
  if (rhs != 2 * static_cast<long long>(tropjac::genus(model_)) - 2)
    throw InternalConsistencyError("curve genus formula does not match the model genus");
}

int TropicalCurve::genus() const { return tropjac::genus(model_); }

void TropicalCurve::validate_point(const CurvePoint& p) const {
  if (p.is_vertex()) {
    if (p.vertex < 0 || p.vertex >= model_.num_vertices())
      throw ValidationError("curve point: unknown vertex");
    return;
  }
  if (p.edge < 0 || p.edge >= model_.num_edges())
    throw ValidationError("curve point: unknown edge");
  if (p.offset <= 0 || p.offset >= length(p.edge))
    throw ValidationError("curve point offset must satisfy 0 < offset < length");
}

CurveDivisor::CurveDivisor(std::vector<std::pair<CurvePoint, long long>> support)
    : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < support_.size(); ++i)
    if (support_[i].first == support_[i + 1].first)
      throw ValidationError("curve divisor support has duplicate points");
  std::erase_if(support_, [](const auto& kv) { return kv.second == 0; });
}

long long CurveDivisor::degree() const {
  long long d = 0;
  for (const auto& [p, v] : support_) d += v;
  return d;
}

long long CurveDivisor::value_at(const CurvePoint& p) const {
  for (const auto& [q, v] : support_)
    if (q == p) return v;
  return 0;
}

void CurveDivisor::add(const CurvePoint& p, long long v) {
  if (v == 0) return;
  auto it = std::lower_bound(support_.begin(), support_.end(), p,
                             [](const auto& kv, const CurvePoint& q) { return kv.first < q; });
  if (it != support_.end() && it->first == p) {
    it->second += v;
    if (it->second == 0) support_.erase(it);
  } else {
    support_.insert(it, {p, v});
  }
}

CurveDivisor CurveDivisor::operator+(const CurveDivisor& o) const {
  CurveDivisor r = *this;
  for (const auto& [p, v] : o.support_) r.add(p, v);
  return r;
}

CurveDivisor CurveDivisor::operator-(const CurveDivisor& o) const {
  CurveDivisor r = *this;
  for (const auto& [p, v] : o.support_) r.add(p, -v);
  return r;
}

CurvePolarization make_curve_polarization(long long degree,
                                          std::vector<std::pair<CurvePoint, Rat>> values) {
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(values, [](const auto& kv) { return kv.second == 0; });
  Rat sum = 0;
  for (const auto& [p, v] : values) sum += v;
  if (sum != Rat(static_cast<long>(degree)))
    throw ValidationError("curve polarization does not sum to its degree");
  return CurvePolarization{degree, std::move(values)};
}

CurvePolarization curve_polarization_from_graph(const Graph& g, const Polarization& mu) {
  validate_polarization(g, mu);
  std::vector<std::pair<CurvePoint, Rat>> values;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (mu.values[v] != 0) values.push_back({CurvePoint::at_vertex(v), mu.values[v]});
  return CurvePolarization{mu.degree, std::move(values)};
}

CurvePoint RefinedModel::to_refined(const CurvePoint& base) const {
  if (base.is_vertex()) return CurvePoint::at_vertex(base_vertex_to_refined.at(base.vertex));
  for (size_t r = 0; r < edge_base.size(); ++r) {
    if (edge_base[r] != base.edge) continue;
    Rat start = edge_start[r];
    Rat end = start + curve.length(static_cast<int>(r));
    if (base.offset == start)
      return CurvePoint::at_vertex(curve.model().edge(static_cast<int>(r)).u);
    if (base.offset == end)
      return CurvePoint::at_vertex(curve.model().edge(static_cast<int>(r)).v);
    if (base.offset > start && base.offset < end)
      return CurvePoint::on_edge(static_cast<int>(r), base.offset - start);
  }
  throw ValidationError("point is not on the refined model");
}

CurvePoint RefinedModel::to_base(const CurvePoint& refined) const {
  if (refined.is_vertex()) return vertex_point.at(refined.vertex);
  return CurvePoint::on_edge(edge_base.at(refined.edge),
                             edge_start.at(refined.edge) + refined.offset);
}

std::optional<int> RefinedModel::vertex_of(const CurvePoint& base) const {
  CurvePoint r = to_refined(base);
  if (r.is_vertex()) return r.vertex;
  return std::nullopt;
}

RefinedModel refine_at(const TropicalCurve& x, const std::vector<CurvePoint>& points) {
  const Graph& g = x.model();
  std::map<int, std::vector<Rat>> cuts;  // edge -> sorted interior offsets
  for (const CurvePoint& p : points) {
    x.validate_point(p);
    if (!p.is_vertex()) cuts[p.edge].push_back(p.offset);
  }
  for (auto& [e, offs] : cuts) {
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
  }

  RefinedModel m;
  const int n = g.num_vertices();
  std::vector<int> weights = g.weights();
  m.vertex_point.reserve(n);
  m.base_vertex_to_refined.resize(n);
  for (int v = 0; v < n; ++v) {
    m.vertex_point.push_back(CurvePoint::at_vertex(v));
    m.base_vertex_to_refined[v] = v;
  }
  std::vector<Graph::Edge> edges;
  std::vector<Rat> lengths;
  // Breakpoint vertices follow the originals in (edge, offset) order; each
  // base edge contributes its chain of segments consecutively.
  int next_vertex = n;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto it = cuts.find(e);
    int prev = g.edge(e).u;
    Rat prev_off = 0;
    if (it != cuts.end()) {
      for (const Rat& off : it->second) {
        int x_v = next_vertex++;
        weights.push_back(0);
        m.vertex_point.push_back(CurvePoint::on_edge(e, off));
        edges.push_back({prev, x_v});
        lengths.push_back(off - prev_off);
        m.edge_base.push_back(e);
        m.edge_start.push_back(prev_off);
        prev = x_v;
        prev_off = off;
      }
    }
    edges.push_back({prev, g.edge(e).v});
    lengths.push_back(x.length(e) - prev_off);
    m.edge_base.push_back(e);
    m.edge_start.push_back(prev_off);
  }
  m.curve = TropicalCurve(Graph(std::move(weights), std::move(edges), g.legs()),
                          std::move(lengths));
  return m;
}

RefinedModel model_with_divisor(const TropicalCurve& x, const CurveDivisor& d,
                                const CurvePolarization& mu,
                                const std::vector<CurvePoint>& extra) {
  std::vector<CurvePoint> pts;
  for (const auto& [p, v] : d.support()) pts.push_back(p);
  for (const auto& [p, v] : mu.values) pts.push_back(p);
  for (const CurvePoint& p : extra) pts.push_back(p);
  return refine_at(x, pts);
}

std::vector<int> out_set(const RefinedModel& m, const std::vector<bool>& subcurve) {
  const Graph& g = m.curve.model();
  if (static_cast<int>(subcurve.size()) != g.num_vertices())
    throw ValidationError("subcurve indicator does not match the model");
  std::vector<int> cut;
  for (int e = 0; e < g.num_edges(); ++e)
    if (subcurve[g.edge(e).u] != subcurve[g.edge(e).v]) cut.push_back(e);
  return cut;
}

namespace {

// Reads point-supported data at the vertices of a refined model. Throws when
// some support point is not a vertex there.
template <typename T, typename Map>
std::vector<T> values_at_vertices(const RefinedModel& m, const Map& support, T zero,
                                  const char* what) {
  std::vector<T> out(m.curve.model().num_vertices(), zero);
  for (const auto& [p, v] : support) {
    auto idx = m.vertex_of(p);
    if (!idx) throw ValidationError(std::string(what) + " is not supported on model vertices");
    out[*idx] += v;
  }
  return out;
}

}  // namespace

Polarization polarization_on_model(const RefinedModel& m, const CurvePolarization& mu) {
  auto vals = values_at_vertices<Rat>(m, mu.values, Rat(0), "polarization");
  return Polarization{mu.degree, std::move(vals)};
}

Divisor divisor_on_model(const RefinedModel& m, const CurveDivisor& d) {
  auto vals = values_at_vertices<long long>(m, d.support(), 0, "divisor");
  return Divisor(std::move(vals));
}

Rat beta_curve(const RefinedModel& m, const CurvePolarization& mu, const CurveDivisor& d,
               const std::vector<bool>& subcurve) {
  Polarization gmu = polarization_on_model(m, mu);
  Divisor gd = divisor_on_model(m, d);
  std::vector<int> subset;
  for (int v = 0; v < m.curve.model().num_vertices(); ++v)
    if (subcurve[v]) subset.push_back(v);
  // mu may not sum to deg(d); evaluate the formula directly.
  Rat deg = 0;
  for (int v : subset) deg += Rat(static_cast<long>(gd[v]));
  return deg - polarization_sum(gmu, subset) + Rat(delta(m.curve.model(), subset)) / 2;
}

bool is_quasistable_curve(const TropicalCurve& x, const CurvePoint& p0,
                          const CurvePolarization& mu, const CurveDivisor& d) {
  RefinedModel m = model_with_divisor(x, d, mu, {p0});
  auto v0 = m.vertex_of(p0);
  if (!v0) throw InternalConsistencyError("base point missing from its own refinement");
  return is_quasistable(m.curve.model(), *v0, polarization_on_model(m, mu),
                        divisor_on_model(m, d));
}

bool is_stable_curve(const TropicalCurve& x) {
  const Graph& g = x.model();
  for (int v = 0; v < g.num_vertices(); ++v) {
    int dv = valence(g, v);
    if (dv <= 1 && dv + 2 * g.weight(v) + g.num_legs_at(v) < 3) return false;
  }
  return true;
}

CurvePoint CurvePointMap::map(const CurvePoint& p) const {
  if (p.is_vertex()) return CurvePoint::at_vertex(spec.vertex_map.at(p.vertex));
  int e = spec.edge_map.at(p.edge);
  if (e < 0) return CurvePoint::at_vertex(spec.vertex_map.at(spec.source.edge(p.edge).u));
  return CurvePoint::on_edge(e, p.offset);
}

std::pair<TropicalCurve, CurvePointMap> specialize_curve(const TropicalCurve& x,
                                                         const std::vector<int>& edge_subset) {
  auto [target, spec] = contract(x.model(), edge_subset);
  std::vector<Rat> lengths(target.num_edges());
  for (int e = 0; e < target.num_edges(); ++e) lengths[e] = x.length(spec.kept_edges[e]);
  return {TropicalCurve(target, std::move(lengths)), CurvePointMap{std::move(spec)}};
}

CurveDivisor pushforward_curve_divisor(const CurvePointMap& m, const CurveDivisor& d) {
  CurveDivisor out;
  for (const auto& [p, v] : d.support()) out.add(m.map(p), v);
  return out;
}

CurvePolarization pushforward_curve_polarization(const CurvePointMap& m,
                                                 const CurvePolarization& mu) {
  std::map<CurvePoint, Rat> acc;
  for (const auto& [p, v] : mu.values) acc[m.map(p)] += v;
  std::vector<std::pair<CurvePoint, Rat>> values(acc.begin(), acc.end());
  return make_curve_polarization(mu.degree, std::move(values));
}

RefinedModel relevant_model(const TropicalCurve& x, const CurvePoint& p0,
                            const CurvePolarization& mu) {
  std::vector<CurvePoint> pts = {p0};
  for (const auto& [p, v] : mu.values) pts.push_back(p);
  return refine_at(x, pts);
}

InducedPseudoDivisor induced_pseudo_divisor(const TropicalCurve& x, const CurvePoint& p0,
                                            const CurvePolarization& mu, const CurveDivisor& d) {
  if (!is_quasistable_curve(x, p0, mu, d))
    throw ValidationError("divisor is not quasistable; no induced pseudo-divisor");
  RefinedModel base = relevant_model(x, p0, mu);
  const Graph& g = base.curve.model();

  // Interior support of d on the relevant model: at most one point per edge,
  // with value exactly -1.
  std::map<int, Rat> interior;
  Divisor vertex_values = Divisor::zero(g.num_vertices());
  for (const auto& [p, v] : d.support()) {
    CurvePoint r = base.to_refined(p);
    if (r.is_vertex()) {
      vertex_values[r.vertex] += v;
      continue;
    }
    if (interior.count(r.edge))
      throw InternalConsistencyError("quasistable divisor with two interior points on one edge");
    if (v != -1)
      throw InternalConsistencyError("quasistable divisor with interior value != -1");
    interior[r.edge] = r.offset;
  }

  InducedPseudoDivisor out;
  out.model_graph = g;
  std::vector<long long> lifted = vertex_values.values();
  for (const auto& [e, off] : interior) {
    out.pd.edges.push_back(e);
    out.offsets.push_back({e, off});
    lifted.push_back(-1);
  }
  out.pd.div = Divisor(std::move(lifted));
  validate_pseudo_divisor(g, out.pd);
  return out;
}

}  // namespace tropjac
