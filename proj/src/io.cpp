#include "tropjac/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropjac::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

long long require_ll(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Rat require_rat(const json& j, const char* what) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(std::string(what) + " must be an integer or a \"p/q\" string");
  return rat_from_string(j.get<std::string>());
}

const json& require_field(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

int GraphBundle::vertex_index(int external_id) const {
  for (size_t i = 0; i < vertex_ids.size(); ++i)
    if (vertex_ids[i] == external_id) return static_cast<int>(i);
  fail("unknown vertex id " + std::to_string(external_id));
}

int GraphBundle::edge_index(int external_id) const {
  for (size_t i = 0; i < edge_ids.size(); ++i)
    if (edge_ids[i] == external_id) return static_cast<int>(i);
  fail("unknown edge id " + std::to_string(external_id));
}

GraphBundle bundle_with_dense_ids(const Graph& g) {
  GraphBundle b;
  b.graph = g;
  b.vertex_ids.resize(g.num_vertices());
  b.edge_ids.resize(g.num_edges());
  for (int v = 0; v < g.num_vertices(); ++v) b.vertex_ids[v] = v;
  for (int e = 0; e < g.num_edges(); ++e) b.edge_ids[e] = e;
  return b;
}

GraphBundle graph_from_json(const json& j) {
  if (!j.is_object()) fail("graph: expected an object");
  GraphBundle b;
  std::vector<int> weights;
  const json& jv = require_field(j, "vertices", "graph");
  for (const json& v : jv) {
    b.vertex_ids.push_back(require_int(require_field(v, "id", "vertex"), "vertex id"));
    weights.push_back(v.contains("weight") ? require_int(v["weight"], "vertex weight") : 0);
  }
  {
    auto sorted = b.vertex_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("graph: duplicate vertex ids");
  }
  std::vector<Graph::Edge> edges;
  if (j.contains("edges")) {
    for (const json& e : j["edges"]) {
      b.edge_ids.push_back(require_int(require_field(e, "id", "edge"), "edge id"));
      const json& ends = require_field(e, "ends", "edge");
      if (!ends.is_array() || ends.size() != 2) fail("edge ends must be a pair");
      edges.push_back({b.vertex_index(require_int(ends[0], "edge end")),
                       b.vertex_index(require_int(ends[1], "edge end"))});
    }
    auto sorted = b.edge_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("graph: duplicate edge ids");
  }
  std::vector<std::pair<int, int>> legs;  // (index, vertex idx)
  if (j.contains("legs")) {
    for (const json& l : j["legs"])
      legs.push_back({require_int(require_field(l, "index", "leg"), "leg index"),
                      b.vertex_index(require_int(require_field(l, "vertex", "leg"), "leg vertex"))});
  }
  std::sort(legs.begin(), legs.end());
  std::vector<int> leg_vertices;
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].first != static_cast<int>(i)) fail("legs must be indexed 0..n-1");
    leg_vertices.push_back(legs[i].second);
  }
  b.graph = Graph(std::move(weights), std::move(edges), std::move(leg_vertices));
  return b;
}

json graph_to_json(const GraphBundle& b) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < b.graph.num_vertices(); ++v)
    j["vertices"].push_back({{"id", b.vertex_ids[v]}, {"weight", b.graph.weight(v)}});
  j["edges"] = json::array();
  for (int e = 0; e < b.graph.num_edges(); ++e)
    j["edges"].push_back({{"id", b.edge_ids[e]},
                          {"ends", {b.vertex_ids[b.graph.edge(e).u], b.vertex_ids[b.graph.edge(e).v]}}});
  j["legs"] = json::array();
  for (size_t i = 0; i < b.graph.legs().size(); ++i)
    j["legs"].push_back({{"index", static_cast<int>(i)}, {"vertex", b.vertex_ids[b.graph.legs()[i]]}});
  return j;
}

Divisor divisor_from_json(const json& j, const GraphBundle& b) {
  if (!j.is_array()) fail("divisor: expected an array of {vertex, value}");
  Divisor d = Divisor::zero(b.graph.num_vertices());
  for (const json& item : j) {
    int v = b.vertex_index(require_int(require_field(item, "vertex", "divisor"), "vertex"));
    d[v] += require_ll(require_field(item, "value", "divisor"), "value");
  }
  return d;
}

json divisor_to_json(const Divisor& d, const GraphBundle& b) {
  json j = json::array();
  for (int v = 0; v < d.size(); ++v)
    if (d[v] != 0) j.push_back({{"vertex", b.vertex_ids[v]}, {"value", d[v]}});
  return j;
}

PseudoDivisor pseudo_divisor_from_json(const json& j, const GraphBundle& b) {
  if (!j.is_object()) fail("pseudo-divisor: expected an object");
  std::vector<int> edges;
  for (const json& e : require_field(j, "edges", "pseudo-divisor"))
    edges.push_back(b.edge_index(require_int(e, "edge id")));
  std::sort(edges.begin(), edges.end());
  Divisor div = Divisor::zero(b.graph.num_vertices() + static_cast<int>(edges.size()));
  for (size_t i = 0; i < edges.size(); ++i) div[b.graph.num_vertices() + static_cast<int>(i)] = -1;
  const json& values = require_field(j, "divisor", "pseudo-divisor");
  if (!values.is_object()) fail("pseudo-divisor: 'divisor' must map vertices to values");
  auto parse_id = [](const std::string& text) {
    try {
      return std::stoi(text);
    } catch (const std::exception&) {
      fail("pseudo-divisor: key '" + text + "' is not an id");
    }
  };
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string& key = it.key();
    long long value = require_ll(it.value(), "pseudo-divisor value");
    if (key.rfind("exc:", 0) == 0) {
      int e = b.edge_index(parse_id(key.substr(4)));
      auto pos = std::lower_bound(edges.begin(), edges.end(), e);
      if (pos == edges.end() || *pos != e) fail("exceptional key for an edge outside 'edges'");
      div[b.graph.num_vertices() + static_cast<int>(pos - edges.begin())] = value;
    } else {
      div[b.vertex_index(parse_id(key))] = value;
    }
  }
  PseudoDivisor pd{std::move(edges), std::move(div)};
  validate_pseudo_divisor(b.graph, pd);
  return pd;
}

json pseudo_divisor_to_json(const PseudoDivisor& pd, const GraphBundle& b) {
  json j;
  j["edges"] = json::array();
  for (int e : pd.edges) j["edges"].push_back(b.edge_ids[e]);
  json values = json::object();
  for (int v = 0; v < b.graph.num_vertices(); ++v)
    if (pd.div[v] != 0) values[std::to_string(b.vertex_ids[v])] = pd.div[v];
  for (size_t i = 0; i < pd.edges.size(); ++i)
    values["exc:" + std::to_string(b.edge_ids[pd.edges[i]])] =
        pd.div[b.graph.num_vertices() + static_cast<int>(i)];
  j["divisor"] = std::move(values);
  return j;
}

Polarization polarization_from_json(const json& j, const GraphBundle& b) {
  if (!j.is_object()) fail("polarization: expected an object");
  long long degree = require_ll(require_field(j, "degree", "polarization"), "degree");
  std::vector<Rat> vals(b.graph.num_vertices(), Rat(0));
  for (const json& item : require_field(j, "values", "polarization")) {
    int v = b.vertex_index(require_int(require_field(item, "vertex", "polarization"), "vertex"));
    vals[v] += require_rat(require_field(item, "value", "polarization"), "value");
  }
  return make_polarization(degree, std::move(vals));
}

json polarization_to_json(const Polarization& mu, const GraphBundle& b) {
  json j;
  j["degree"] = mu.degree;
  j["values"] = json::array();
  for (size_t v = 0; v < mu.values.size(); ++v)
    if (mu.values[v] != 0)
      j["values"].push_back(
          {{"vertex", b.vertex_ids[v]}, {"value", rat_to_string(mu.values[v])}});
  return j;
}

CurveBundle curve_from_json(const json& j) {
  CurveBundle c;
  c.ids = graph_from_json(j);
  std::vector<Rat> lengths(c.ids.graph.num_edges(), Rat(0));
  std::vector<char> seen(c.ids.graph.num_edges(), 0);
  for (const json& item : require_field(j, "lengths", "curve")) {
    int e = c.ids.edge_index(require_int(require_field(item, "edge", "length"), "edge"));
    lengths[e] = require_rat(require_field(item, "value", "length"), "length");
    seen[e] = 1;
  }
  for (char s : seen)
    if (!s) fail("curve: every edge needs a length");
  c.curve = TropicalCurve(c.ids.graph, std::move(lengths));
  return c;
}

json curve_to_json(const CurveBundle& b) {
  json j = graph_to_json(b.ids);
  j["lengths"] = json::array();
  for (int e = 0; e < b.curve.model().num_edges(); ++e)
    j["lengths"].push_back(
        {{"edge", b.ids.edge_ids[e]}, {"value", rat_to_string(b.curve.length(e))}});
  return j;
}

namespace {

json point_to_json(const CurvePoint& p, const CurveBundle& b) {
  if (p.is_vertex()) return json{{"vertex", b.ids.vertex_ids[p.vertex]}};
  return json{{"edge", b.ids.edge_ids[p.edge]}, {"offset", rat_to_string(p.offset)}};
}

CurvePoint point_from_json(const json& j, const CurveBundle& b) {
  if (j.contains("vertex"))
    return CurvePoint::at_vertex(b.ids.vertex_index(require_int(j["vertex"], "vertex")));
  CurvePoint p = CurvePoint::on_edge(
      b.ids.edge_index(require_int(require_field(j, "edge", "curve point"), "edge")),
      require_rat(require_field(j, "offset", "curve point"), "offset"));
  b.curve.validate_point(p);
  return p;
}

}  // namespace

CurveDivisor curve_divisor_from_json(const json& j, const CurveBundle& b) {
  if (!j.is_array()) fail("curve divisor: expected an array");
  CurveDivisor d;
  for (const json& item : j)
    d.add(point_from_json(require_field(item, "at", "curve divisor"), b),
          require_ll(require_field(item, "value", "curve divisor"), "value"));
  return d;
}

json curve_divisor_to_json(const CurveDivisor& d, const CurveBundle& b) {
  json j = json::array();
  for (const auto& [p, v] : d.support()) j.push_back({{"at", point_to_json(p, b)}, {"value", v}});
  return j;
}

json trace_to_json(const TropicalReduction& r, const CurveBundle& b) {
  json steps = json::array();
  for (const TraceStep& s : r.trace) {
    json fired_points = json::array();
    for (const CurvePoint& p : s.fired_subcurve) fired_points.push_back(point_to_json(p, b));
    steps.push_back({{"subcurve", std::move(fired_points)},
                     {"length", rat_to_string(s.ell)},
                     {"fired", curve_divisor_to_json(s.fired, b)},
                     {"beta_min", rat_to_string(s.beta_min)},
                     {"relevant_outside", s.rel}});
  }
  return json{{"reduced", curve_divisor_to_json(r.divisor, b)}, {"trace", std::move(steps)}};
}

json poset_to_json(const QDPoset& p, const GraphBundle& b) {
  json elements = json::array();
  for (const PseudoDivisor& pd : p.elements) elements.push_back(pseudo_divisor_to_json(pd, b));
  json covers = json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({{"parent", x}, {"child", y}});
  return json{{"elements", std::move(elements)},
              {"covers", std::move(covers)},
              {"ranks", p.ranks}};
}

namespace {

std::string pseudo_label(const PseudoDivisor& pd, const GraphBundle& b) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < pd.edges.size(); ++i)
    os << (i ? "," : "") << "e" << b.edge_ids[pd.edges[i]];
  os << "| ";
  for (int v = 0; v < b.graph.num_vertices(); ++v) os << (v ? " " : "") << pd.div[v];
  os << ")";
  return os.str();
}

}  // namespace

std::string poset_to_dot(const QDPoset& p, const GraphBundle& b) {
  std::ostringstream os;
  os << "digraph qd_poset {\n  rankdir=TB;\n";
  for (size_t i = 0; i < p.elements.size(); ++i)
    os << "  n" << i << " [label=\"" << pseudo_label(p.elements[i], b) << "\"];\n";
  for (auto [x, y] : p.cover_pairs()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

json jacobian_to_json(const JacobianComplex& c) {
  json cells = json::array();
  for (const JacobianCell& cell : c.cells) {
    json sides = json::array();
    for (const Rat& s : cell.side_lengths) sides.push_back(rat_to_string(s));
    cells.push_back({{"element", cell.element},
                     {"dimension", cell.edges.size()},
                     {"edges", cell.edges},
                     {"side_lengths", std::move(sides)}});
  }
  json faces = json::array();
  for (const JacobianFace& f : c.faces)
    faces.push_back({{"cell", f.cell}, {"subcell", f.subcell}, {"edge", f.edge}, {"side", f.side}});
  auto fv = f_vector(c);
  return json{{"f_vector", fv},
              {"euler_characteristic", euler_characteristic(c)},
              {"cells", std::move(cells)},
              {"faces", std::move(faces)}};
}

std::string jacobian_dual_dot(const JacobianComplex& c) {
  std::ostringstream os;
  os << "graph jacobian_dual {\n";
  for (size_t i = 0; i < c.cells.size(); ++i)
    os << "  c" << i << " [label=\"dim " << c.cells[i].edges.size() << "\"];\n";
  for (const JacobianFace& f : c.faces) os << "  c" << f.cell << " -- c" << f.subcell << ";\n";
  os << "}\n";
  return os.str();
}

json catalog_to_json(const StableGraphCatalog& cat) {
  json classes = json::array();
  for (const Graph& g : cat.classes) classes.push_back(graph_to_json(bundle_with_dense_ids(g)));
  json arrows = json::array();
  for (const auto& a : cat.arrows)
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"edge", a.edge}});
  return json{{"genus", cat.genus}, {"classes", std::move(classes)}, {"arrows", std::move(arrows)}};
}

json universal_to_json(const UniversalQD& u, const UniversalReport& rep) {
  json elements = json::array();
  for (const auto& el : u.elements) {
    GraphBundle b = bundle_with_dense_ids(u.catalog.classes[el.cls]);
    elements.push_back({{"class", el.cls},
                        {"dimension", el.dim},
                        {"pseudo_divisor", pseudo_divisor_to_json(el.pd, b)}});
  }
  json covers = json::array();
  for (auto [p, c] : u.covers) covers.push_back({{"parent", p}, {"child", c}});
  return json{{"genus", u.genus},
              {"degree", u.degree},
              {"catalog", catalog_to_json(u.catalog)},
              {"elements", std::move(elements)},
              {"covers", std::move(covers)},
              {"verification",
               {{"expected_dimension", rep.expected_dimension},
                {"pure_dimension", rep.pure_dimension},
                {"codim1_connected", rep.codim1_connected},
                {"forgetful_order_preserving", rep.forgetful_order_preserving},
                {"violations", rep.violations}}}};
}

}  // namespace tropjac::io
