#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tropjac/acceptance.hpp"
#include "tropjac/io.hpp"

namespace {

using tropjac::io::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tropjac::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const std::string& path) { return tropjac::io::parse(read_file(path)); }

tropjac::Polarization resolve_mu(const std::string& spec, const tropjac::io::GraphBundle& b,
                                 long long degree) {
  if (spec == "zero") {
    if (degree != 0)
      throw tropjac::ValidationError("the zero polarization has degree 0, got --degree " +
                                     std::to_string(degree));
    return tropjac::zero_polarization(b.graph);
  }
  if (spec == "canonical") return tropjac::canonical_polarization(b.graph, degree);
  if (spec == "concentrated") return tropjac::v0_concentrated_polarization(b.graph, degree);
  tropjac::Polarization mu = tropjac::io::polarization_from_json(load(spec), b);
  return mu;
}

int resolve_v0(const tropjac::io::GraphBundle& b, int v0_id, bool v0_given) {
  if (v0_given) return b.vertex_index(v0_id);
  return b.graph.v0();
}

struct CommonOpts {
  std::string graph_path;
  std::string curve_path;
  std::string divisor_path;
  std::string pseudo_path;
  std::string mu_spec = "zero";
  long long degree = 0;
  int v0_id = 0;
  bool v0_given = false;
  bool dot = false;
  bool trace = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const CommonOpts& o) {
  auto b = tropjac::io::graph_from_json(load(o.graph_path));
  auto mu = resolve_mu(o.mu_spec, b, o.degree);
  int v0 = resolve_v0(b, o.v0_id, o.v0_given);
  if (!o.pseudo_path.empty()) {
    auto pd = tropjac::io::pseudo_divisor_from_json(load(o.pseudo_path), b);
    bool q = tropjac::is_quasistable_pseudo(b.graph, v0, mu, pd);
    emit(json{{"quasistable", q}});
    return 0;
  }
  auto d = tropjac::io::divisor_from_json(load(o.divisor_path), b);
  auto check = tropjac::check_stability(b.graph, v0, mu, d);
  json out{{"quasistable", check.quasistable}, {"semistable", check.semistable}};
  if (check.violation) {
    json subset = json::array();
    for (int v : check.violation->subset) subset.push_back(b.vertex_ids[v]);
    out["violation"] = {{"subset", std::move(subset)},
                        {"beta", tropjac::rat_to_string(check.violation->value)}};
  }
  emit(out);
  return 0;
}

int run_reduce(const CommonOpts& o) {
  if (!o.graph_path.empty()) {
    auto b = tropjac::io::graph_from_json(load(o.graph_path));
    auto mu = resolve_mu(o.mu_spec, b, o.degree);
    int v0 = resolve_v0(b, o.v0_id, o.v0_given);
    auto d = tropjac::io::divisor_from_json(load(o.divisor_path), b);
    tropjac::Divisor r = tropjac::reduce_graph(b.graph, v0, mu, d);
    emit(json{{"reduced", tropjac::io::divisor_to_json(r, b)}});
    return 0;
  }
  auto cb = tropjac::io::curve_from_json(load(o.curve_path));
  auto mu = resolve_mu(o.mu_spec, cb.ids, o.degree);
  int v0 = resolve_v0(cb.ids, o.v0_id, o.v0_given);
  auto d = tropjac::io::curve_divisor_from_json(load(o.divisor_path), cb);
  tropjac::TropicalReduction red =
      tropjac::reduce_tropical(cb.curve, tropjac::CurvePoint::at_vertex(v0),
                               tropjac::curve_polarization_from_graph(cb.ids.graph, mu), d);
  if (o.trace) {
    emit(tropjac::io::trace_to_json(red, cb));
  } else {
    emit(json{{"reduced", tropjac::io::curve_divisor_to_json(red.divisor, cb)}});
  }
  return 0;
}

int run_poset(const CommonOpts& o) {
  auto b = tropjac::io::graph_from_json(load(o.graph_path));
  auto mu = resolve_mu(o.mu_spec, b, o.degree);
  int v0 = resolve_v0(b, o.v0_id, o.v0_given);
  tropjac::QDPoset p = tropjac::build_qd_poset(b.graph, v0, mu);
  if (o.dot) {
    std::cout << tropjac::io::poset_to_dot(p, b);
  } else {
    auto [ranked, length] = tropjac::verify_ranked(p);
    json out = tropjac::io::poset_to_json(p, b);
    out["ranked"] = ranked;
    out["length"] = length;
    out["connected_codim1"] = tropjac::verify_connected_codim1(p);
    emit(out);
  }
  return 0;
}

int run_jacobian(const CommonOpts& o) {
  auto cb = tropjac::io::curve_from_json(load(o.curve_path));
  auto mu = resolve_mu(o.mu_spec, cb.ids, o.degree);
  int v0 = resolve_v0(cb.ids, o.v0_id, o.v0_given);
  tropjac::JacobianComplex c = tropjac::build_jacobian_complex(
      cb.curve, tropjac::CurvePoint::at_vertex(v0),
      tropjac::curve_polarization_from_graph(cb.ids.graph, mu));
  if (o.dot)
    std::cout << tropjac::io::jacobian_dual_dot(c);
  else
    emit(tropjac::io::jacobian_to_json(c));
  return 0;
}

int run_universal(int genus, const std::string& family, long long degree) {
  tropjac::PolarizationFamily fam;
  if (family == "canonical")
    fam = tropjac::PolarizationFamily::Canonical;
  else if (family == "concentrated")
    fam = tropjac::PolarizationFamily::V0Concentrated;
  else
    throw tropjac::ValidationError("unknown polarization family: " + family);
  tropjac::UniversalQD u = tropjac::build_universal_qd(genus, fam, degree);
  tropjac::UniversalReport rep = tropjac::verify_universal_theorems(u);
  emit(tropjac::io::universal_to_json(u, rep));
  return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasistable divisors, chip-firing reduction and tropical Jacobians"};
  app.require_subcommand(1);

  CommonOpts o;
  int genus = 1;
  std::string family = "concentrated";

  auto add_mu = [&](CLI::App* cmd) {
    cmd->add_option("--mu", o.mu_spec,
                    "polarization: zero | canonical | concentrated | <file.json>");
    cmd->add_option("--degree", o.degree, "degree of the named polarization families");
    cmd->add_option("--v0", o.v0_id, "marked vertex id (default: leg 0)")
        ->each([&](const std::string&) { o.v0_given = true; });
  };

  CLI::App* check = app.add_subcommand("check", "decide quasistability of a (pseudo-)divisor");
  check->add_option("--graph", o.graph_path, "graph JSON")->required();
  check->add_option("--divisor", o.divisor_path, "divisor JSON");
  check->add_option("--pseudo", o.pseudo_path, "pseudo-divisor JSON");
  add_mu(check);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce to the quasistable representative");
  reduce->add_option("--graph", o.graph_path, "graph JSON");
  reduce->add_option("--curve", o.curve_path, "curve JSON");
  reduce->add_option("--divisor", o.divisor_path, "divisor JSON")->required();
  reduce->add_flag("--trace", o.trace, "emit the chip-firing trace");
  add_mu(reduce);

  CLI::App* poset = app.add_subcommand("poset", "the poset of quasistable pseudo-divisors");
  poset->add_option("--graph", o.graph_path, "graph JSON")->required();
  poset->add_flag("--dot", o.dot, "emit the Hasse diagram as DOT");
  add_mu(poset);

  CLI::App* jacobian = app.add_subcommand("jacobian", "the polyhedral Jacobian of a curve");
  jacobian->add_option("--curve", o.curve_path, "curve JSON")->required();
  jacobian->add_flag("--dot", o.dot, "emit the dual incidence graph as DOT");
  add_mu(jacobian);

  CLI::App* universal = app.add_subcommand("universal", "the universal poset at small genus");
  universal->add_option("--genus", genus, "genus (1..3)")->required();
  universal->add_option("--family", family, "canonical | concentrated");
  universal->add_option("--degree", o.degree, "polarization degree");

  CLI::App* selftest = app.add_subcommand("selftest", "run the verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) {
      if (o.divisor_path.empty() == o.pseudo_path.empty())
        throw tropjac::ValidationError("check needs exactly one of --divisor / --pseudo");
      return run_check(o);
    }
    if (app.got_subcommand(reduce)) {
      if (o.graph_path.empty() == o.curve_path.empty())
        throw tropjac::ValidationError("reduce needs exactly one of --graph / --curve");
      return run_reduce(o);
    }
    if (app.got_subcommand(poset)) return run_poset(o);
    if (app.got_subcommand(jacobian)) return run_jacobian(o);
    if (app.got_subcommand(universal)) return run_universal(genus, family, o.degree);
    if (app.got_subcommand(selftest)) return tropjac::run_acceptance(std::cout) ? 0 : 1;
  } catch (const tropjac::InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const tropjac::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
