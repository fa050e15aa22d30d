#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <string>
#include <utility>
#include <vector>

#include "tropjac/acceptance.hpp"
#include "tropjac/io.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/qd_poset.hpp"
#include "tropjac/reduction.hpp"
#include "tropjac/universal.hpp"

namespace py = pybind11;
using namespace tropjac;

namespace {

Rat rat_from_py(const py::object& o) {
  if (py::isinstance<py::int_>(o)) return rat_of(o.cast<long long>());
  return rat_from_string(o.cast<std::string>());
}

std::vector<Rat> rats_from_py(const std::vector<py::object>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(rat_from_py(v));
  return out;
}

Graph make_graph(const std::vector<int>& weights,
                 const std::vector<std::pair<int, int>>& edges, const std::vector<int>& legs) {
  std::vector<Graph::Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(weights, std::move(es), legs);
}

Polarization make_mu(const Graph& g, long long degree, const std::vector<py::object>& values) {
  auto vals = rats_from_py(values);
  if (static_cast<int>(vals.size()) != g.num_vertices())
    throw ValidationError("polarization needs one value per vertex");
  return make_polarization(degree, std::move(vals));
}

py::dict poset_summary(const QDPoset& p) {
  py::dict out;
  py::list elements;
  for (const auto& pd : p.elements)
    elements.append(py::make_tuple(pd.edges, pd.div.values()));
  out["elements"] = std::move(elements);
  out["covers"] = p.cover_pairs();
  out["ranks"] = p.ranks;
  auto [ranked, length] = verify_ranked(p);
  out["ranked"] = ranked;
  out["length"] = length;
  out["connected_codim1"] = verify_connected_codim1(p);
  out["maximal"] = p.maximal_elements();
  return out;
}

CurveDivisor divisor_from_points(const TropicalCurve& x,
                                 const std::vector<std::pair<CurvePoint, long long>>& support) {
  CurveDivisor d;
  for (const auto& [p, v] : support) {
    x.validate_point(p);
    d.add(p, v);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasistable divisors, chip-firing reduction and tropical Jacobians";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError",
                                                   PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("weights"), py::arg("edges"),
           py::arg("legs") = std::vector<int>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("weights", &Graph::weights)
      .def_property_readonly("legs", &Graph::legs)
      .def("edge", [](const Graph& g, int e) { return std::pair(g.edge(e).u, g.edge(e).v); })
      .def("v0", &Graph::v0)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph |V|=" + std::to_string(g.num_vertices()) +
               " |E|=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("betti", &betti);
  m.def("genus", &genus);
  m.def("is_stable", &is_stable);
  m.def("valence",
        py::overload_cast<const Graph&, int, const std::vector<int>&>(&valence));
  m.def("delta", &delta);
  m.def("spanning_trees", &spanning_trees);
  m.def("spanning_tree_path", &spanning_tree_path);
  m.def("matrix_tree_count",
        [](const Graph& g) { return py::cast(matrix_tree_count(g).get_str()); });
  m.def("automorphism_count", [](const Graph& g) { return automorphisms(g).size(); });
  m.def("laplacian", [](const Graph& g) {
    IntMatrix l = laplacian(g);
    std::vector<std::vector<long long>> rows(l.rows, std::vector<long long>(l.cols));
    for (int i = 0; i < l.rows; ++i)
      for (int j = 0; j < l.cols; ++j) rows[i][j] = to_ll(l.at(i, j));
    return rows;
  });

  py::class_<Polarization>(m, "Polarization")
      .def(py::init(&make_mu), py::arg("graph"), py::arg("degree"), py::arg("values"))
      .def_property_readonly("degree", [](const Polarization& mu) { return mu.degree; })
      .def_property_readonly("values", [](const Polarization& mu) {
        std::vector<std::string> out;
        for (const Rat& v : mu.values) out.push_back(rat_to_string(v));
        return out;
      });
  m.def("zero_polarization", &zero_polarization);
  m.def("canonical_polarization", &canonical_polarization);
  m.def("v0_concentrated_polarization", &v0_concentrated_polarization);

  m.def("beta", [](const Graph& g, const Polarization& mu, const std::vector<long long>& d,
                   const std::vector<int>& subset) {
    return rat_to_string(beta(g, mu, Divisor(d), subset));
  });
  m.def("is_quasistable",
        [](const Graph& g, int v0, const Polarization& mu, const std::vector<long long>& d) {
          return is_quasistable(g, v0, mu, Divisor(d));
        });
  m.def("is_semistable", [](const Graph& g, const Polarization& mu,
                            const std::vector<long long>& d) {
    return is_semistable(g, mu, Divisor(d));
  });
  m.def("is_quasistable_pseudo",
        [](const Graph& g, int v0, const Polarization& mu, const std::vector<int>& edges,
           const std::vector<long long>& div) {
          return is_quasistable_pseudo(g, v0, mu, make_pseudo_divisor(g, edges, Divisor(div)));
        });
  m.def("enumerate_quasistable",
        [](const Graph& g, int v0, const Polarization& mu) {
          py::list out;
          for (const auto& pd : enumerate_quasistable(g, v0, mu))
            out.append(py::make_tuple(pd.edges, pd.div.values()));
          return out;
        });
  m.def("reduce_graph", [](const Graph& g, int v0, const Polarization& mu,
                           const std::vector<long long>& d) {
    return reduce_graph(g, v0, mu, Divisor(d)).values();
  });
  m.def("build_qd_poset", [](const Graph& g, int v0, const Polarization& mu) {
    return poset_summary(build_qd_poset(g, v0, mu));
  });

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_static("at_vertex", &CurvePoint::at_vertex)
      .def_static("on_edge",
                  [](int e, const py::object& off) { return CurvePoint::on_edge(e, rat_from_py(off)); })
      .def_property_readonly("is_vertex", &CurvePoint::is_vertex)
      .def_property_readonly("vertex", [](const CurvePoint& p) { return p.vertex; })
      .def_property_readonly("edge", [](const CurvePoint& p) { return p.edge; })
      .def_property_readonly("offset",
                             [](const CurvePoint& p) { return rat_to_string(p.offset); })
      .def("__eq__", [](const CurvePoint& a, const CurvePoint& b) { return a == b; })
      .def("__repr__", [](const CurvePoint& p) {
        if (p.is_vertex()) return "CurvePoint.at_vertex(" + std::to_string(p.vertex) + ")";
        return "CurvePoint.on_edge(" + std::to_string(p.edge) + ", '" +
               rat_to_string(p.offset) + "')";
      });

  py::class_<TropicalCurve>(m, "TropicalCurve")
      .def(py::init([](const Graph& g, const std::vector<py::object>& lengths) {
             return TropicalCurve(g, rats_from_py(lengths));
           }),
           py::arg("model"), py::arg("lengths"))
      .def_property_readonly("model", &TropicalCurve::model)
      .def_property_readonly("genus", &TropicalCurve::genus)
      .def_property_readonly("lengths", [](const TropicalCurve& x) {
        std::vector<std::string> out;
        for (const Rat& l : x.lengths()) out.push_back(rat_to_string(l));
        return out;
      });

  m.def("is_quasistable_curve",
        [](const TropicalCurve& x, const CurvePoint& p0, const Polarization& mu,
           const std::vector<std::pair<CurvePoint, long long>>& support) {
          return is_quasistable_curve(x, p0, curve_polarization_from_graph(x.model(), mu),
                                      divisor_from_points(x, support));
        });
  m.def("reduce_tropical",
        [](const TropicalCurve& x, const CurvePoint& p0, const Polarization& mu,
           const std::vector<std::pair<CurvePoint, long long>>& support) {
          TropicalReduction r =
              reduce_tropical(x, p0, curve_polarization_from_graph(x.model(), mu),
                              divisor_from_points(x, support));
          py::list reduced;
          for (const auto& [p, v] : r.divisor.support()) reduced.append(py::make_tuple(p, v));
          py::list trace;
          for (const auto& step : r.trace)
            trace.append(py::dict(py::arg("beta_min") = rat_to_string(step.beta_min),
                                  py::arg("rel") = step.rel,
                                  py::arg("length") = rat_to_string(step.ell)));
          return py::dict(py::arg("reduced") = std::move(reduced),
                          py::arg("trace") = std::move(trace));
        });
  m.def("tropical_equivalent",
        [](const TropicalCurve& x, const std::vector<std::pair<CurvePoint, long long>>& a,
           const std::vector<std::pair<CurvePoint, long long>>& b) {
          return tropical_equivalent(x, divisor_from_points(x, a), divisor_from_points(x, b));
        });
  m.def("jacobian_f_vector",
        [](const TropicalCurve& x, const CurvePoint& p0, const Polarization& mu) {
          JacobianComplex c =
              build_jacobian_complex(x, p0, curve_polarization_from_graph(x.model(), mu));
          return f_vector(c);
        });
  m.def("jacobian_euler_characteristic",
        [](const TropicalCurve& x, const CurvePoint& p0, const Polarization& mu) {
          JacobianComplex c =
              build_jacobian_complex(x, p0, curve_polarization_from_graph(x.model(), mu));
          return euler_characteristic(c);
        });

  m.def("stable_graph_count",
        [](int genus) { return enumerate_stable_graphs(genus).classes.size(); });
  m.def("universal_summary", [](int genus, const std::string& family, long long degree) {
    PolarizationFamily fam = family == "canonical" ? PolarizationFamily::Canonical
                                                   : PolarizationFamily::V0Concentrated;
    UniversalQD u = build_universal_qd(genus, fam, degree);
    UniversalReport rep = verify_universal_theorems(u);
    std::vector<int> dims;
    for (const auto& el : u.elements) dims.push_back(el.dim);
    return py::dict(py::arg("classes") = u.catalog.classes.size(),
                    py::arg("elements") = u.elements.size(),
                    py::arg("covers") = u.covers.size(), py::arg("dimensions") = dims,
                    py::arg("expected_dimension") = rep.expected_dimension,
                    py::arg("pure_dimension") = rep.pure_dimension,
                    py::arg("codim1_connected") = rep.codim1_connected,
                    py::arg("ok") = rep.ok());
  });

  m.def("graph_from_json", [](const std::string& text) {
    return io::graph_from_json(io::parse(text)).graph;
  });
  m.def("run_acceptance", []() {
    std::ostringstream out;
    bool ok = run_acceptance(out);
    return py::make_tuple(ok, out.str());
  });
}
