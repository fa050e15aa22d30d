#include <doctest.h>

#include "helpers.hpp"
#include "tropjac/quasistability.hpp"
#include "tropjac/tropical_curve.hpp"

using namespace tropjac;
using tjtest::theta;

namespace {

TropicalCurve unit_theta() {
  return TropicalCurve(theta(), {Rat(1), Rat(1), Rat(1)});
}

// The running five-vertex example: three parallel paths plus a tail.
TropicalCurve example_curve() {
  Graph g({0, 0, 0, 0, 0}, {{0, 2}, {2, 1}, {0, 1}, {0, 3}, {3, 1}, {3, 4}}, {0});
  return TropicalCurve(g, std::vector<Rat>(6, Rat(1)));
}

}  // namespace

TEST_CASE("curve construction validates lengths and genus") {
  CHECK(unit_theta().genus() == 2);
  CHECK_THROWS_AS(TropicalCurve(theta(), {Rat(1), Rat(0), Rat(1)}), ValidationError);
  CHECK_THROWS_AS(TropicalCurve(theta(), {Rat(1), Rat(1)}), ValidationError);
}

TEST_CASE("point validation and refinement coordinates") {
  TropicalCurve x = unit_theta();
  x.validate_point(CurvePoint::on_edge(0, make_rat(1, 2)));
  CHECK_THROWS_AS(x.validate_point(CurvePoint::on_edge(0, Rat(1))), ValidationError);
  CHECK_THROWS_AS(x.validate_point(CurvePoint::on_edge(0, Rat(0))), ValidationError);

  RefinedModel m = refine_at(x, {CurvePoint::on_edge(0, make_rat(1, 2))});
  CHECK(m.curve.model().num_vertices() == 3);
  CHECK(m.curve.model().num_edges() == 4);
  // Round trips between base and refined coordinates.
  CurvePoint interior = CurvePoint::on_edge(0, make_rat(1, 4));
  CHECK(m.to_base(m.to_refined(interior)) == interior);
  CHECK(m.to_refined(CurvePoint::on_edge(0, make_rat(1, 2))).is_vertex());
  CHECK(m.to_base(m.to_refined(CurvePoint::on_edge(1, make_rat(2, 3)))) ==
        CurvePoint::on_edge(1, make_rat(2, 3)));
}

TEST_CASE("model with divisor splits support edges") {
  TropicalCurve x = unit_theta();
  CurveDivisor d;
  d.add(CurvePoint::on_edge(0, make_rat(1, 2)), -1);
  d.add(CurvePoint::at_vertex(0), 1);
  CurvePolarization mu;
  RefinedModel m = model_with_divisor(x, d, mu);
  CHECK(m.curve.model().num_vertices() == 3);

  // Supported on vertices: the model is unchanged.
  CurveDivisor vd;
  vd.add(CurvePoint::at_vertex(1), 2);
  RefinedModel m2 = model_with_divisor(x, vd, mu);
  CHECK(m2.curve.model() == x.model());
}

TEST_CASE("out sets and their model dependence") {
  TropicalCurve x = example_curve();
  CurvePoint q0 = CurvePoint::on_edge(0, make_rat(3, 4));
  CurvePoint q1 = CurvePoint::on_edge(2, make_rat(1, 4));
  CurvePoint q2 = CurvePoint::on_edge(2, make_rat(5, 8));
  CurvePoint q3 = CurvePoint::on_edge(4, make_rat(3, 4));
  CurvePoint q4 = CurvePoint::on_edge(5, make_rat(1, 4));
  RefinedModel m = refine_at(x, {q0, q1, q2, q3, q4});

  std::vector<bool> y(m.curve.model().num_vertices(), false);
  for (const CurvePoint& p :
       {CurvePoint::at_vertex(0), CurvePoint::at_vertex(3), q0, q1, q2, q3, q4})
    y[*m.vertex_of(p)] = true;
  CHECK(out_set(m, y) == std::vector<int>{1, 5, 8, 10});

  // Y = X has an empty cut.
  std::vector<bool> all(m.curve.model().num_vertices(), true);
  CHECK(out_set(m, all).empty());

  // Refining the model changes Out(Y): with a coarser model (no q2 as a
  // vertex) the first parallel path contributes a different cut edge.
  RefinedModel coarse = refine_at(x, {q0, q1, q3, q4});
  std::vector<bool> yc(coarse.curve.model().num_vertices(), false);
  for (const CurvePoint& p : {CurvePoint::at_vertex(0), CurvePoint::at_vertex(3), q0, q1, q3, q4})
    yc[*coarse.vertex_of(p)] = true;
  CHECK(out_set(coarse, yc).size() == 4);
  CHECK(out_set(coarse, yc) != std::vector<int>{1, 5, 8, 10});
}

TEST_CASE("beta on subcurves") {
  TropicalCurve x = unit_theta();
  CurveDivisor d;
  d.add(CurvePoint::at_vertex(0), 1);
  d.add(CurvePoint::at_vertex(1), -1);
  CurvePolarization mu;
  RefinedModel m = refine_at(x, {});
  std::vector<bool> v1(2, false);
  v1[1] = true;
  CHECK(beta_curve(m, mu, d, v1) == make_rat(1, 2));
  std::vector<bool> all(2, true);
  CHECK(beta_curve(m, mu, d, all) == Rat(0));
}

TEST_CASE("curve quasistability matches the graph decision") {
  TropicalCurve x = unit_theta();
  CurvePolarization mu;
  CurvePoint p0 = CurvePoint::at_vertex(0);

  CurveDivisor zero;
  CHECK(is_quasistable_curve(x, p0, mu, zero));

  CurveDivisor mid;  // +1 at v0, -1 at the midpoint of e0
  mid.add(CurvePoint::at_vertex(0), 1);
  mid.add(CurvePoint::on_edge(0, make_rat(1, 2)), -1);
  CHECK(is_quasistable_curve(x, p0, mu, mid));
  InducedPseudoDivisor induced = induced_pseudo_divisor(x, p0, mu, mid);
  CHECK(induced.pd.edges == std::vector<int>{0});
  CHECK(induced.pd.div == Divisor({1, 0, -1}));
  CHECK(induced.offsets.size() == 1);
  CHECK(induced.offsets[0].second == make_rat(1, 2));

  CurveDivisor bad;
  bad.add(CurvePoint::at_vertex(0), 2);
  bad.add(CurvePoint::at_vertex(1), -2);
  CHECK_FALSE(is_quasistable_curve(x, p0, mu, bad));
  CHECK_THROWS_AS(induced_pseudo_divisor(x, p0, mu, bad), ValidationError);
}

TEST_CASE("quasistability is refinement independent") {
  tjtest::Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = tjtest::random_connected_multigraph(rng, 4, 6);
    std::vector<Rat> lengths(g.num_edges());
    for (Rat& l : lengths) l = make_rat(tjtest::pick(rng, 1, 3), tjtest::pick(rng, 1, 3));
    TropicalCurve x(g, lengths);
    CurvePolarization mu;
    CurveDivisor d;
    for (int k = 0; k < 2; ++k) {
      d.add(CurvePoint::at_vertex(tjtest::pick(rng, 0, g.num_vertices() - 1)), 1);
      d.add(CurvePoint::at_vertex(tjtest::pick(rng, 0, g.num_vertices() - 1)), -1);
    }
    CurvePoint p0 = CurvePoint::at_vertex(g.v0());
    bool direct = is_quasistable_curve(x, p0, mu, d);

    // Decide again on a strictly finer model: subdivide every edge at 1/3.
    std::vector<CurvePoint> cuts;
    for (int e = 0; e < g.num_edges(); ++e)
      cuts.push_back(CurvePoint::on_edge(e, x.length(e) / 3));
    RefinedModel fine = model_with_divisor(x, d, mu, cuts);
    auto v0 = fine.vertex_of(p0);
    bool refined = is_quasistable(fine.curve.model(), *v0, polarization_on_model(fine, mu),
                                  divisor_on_model(fine, d));
    CHECK(direct == refined);
  }
}

TEST_CASE("curve specialization and pushforward") {
  TropicalCurve x = unit_theta();
  auto [y, pmap] = specialize_curve(x, {0});
  CHECK(y.model().num_vertices() == 1);
  CHECK(y.model().num_edges() == 2);
  Rat total = 0;
  for (const Rat& l : y.lengths()) total += l;
  CHECK(total == Rat(2));

  CurveDivisor d;
  d.add(CurvePoint::at_vertex(0), 3);
  d.add(CurvePoint::on_edge(0, make_rat(1, 2)), -1);
  d.add(CurvePoint::on_edge(1, make_rat(1, 2)), -2);
  CurveDivisor pushed = pushforward_curve_divisor(pmap, d);
  CHECK(pushed.degree() == d.degree());
  // The interior point of the contracted edge lands on the merged vertex.
  CHECK(pushed.value_at(CurvePoint::at_vertex(0)) == 2);

  auto [same, idmap] = specialize_curve(x, {});
  CHECK(same == x);
}

TEST_CASE("quasistability survives curve specializations") {
  tjtest::Rng rng(89);
  int done = 0;
  while (done < 15) {
    Graph g = tjtest::random_connected_multigraph(rng, 4, 6);
    if (g.num_edges() == 0) continue;
    std::vector<Rat> lengths(g.num_edges(), Rat(1));
    TropicalCurve x(g, lengths);
    CurvePolarization mu;
    CurvePoint p0 = CurvePoint::at_vertex(g.v0());

    // Start from a quasistable divisor with an interior point when possible.
    auto qd = enumerate_quasistable(g, g.v0(), zero_polarization(g));
    const PseudoDivisor& pd = qd[static_cast<size_t>(tjtest::pick(rng, 0, static_cast<int>(qd.size()) - 1))];
    CurveDivisor d;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (pd.div[v] != 0) d.add(CurvePoint::at_vertex(v), pd.div[v]);
    for (int e : pd.edges) d.add(CurvePoint::on_edge(e, make_rat(1, 2)), -1);
    if (!is_quasistable_curve(x, p0, mu, d)) continue;

    std::vector<int> contracted;
    for (int e = 0; e < g.num_edges(); ++e)
      if (tjtest::pick(rng, 0, 2) == 0 && !std::binary_search(pd.edges.begin(), pd.edges.end(), e))
        contracted.push_back(e);
    if (contracted.empty()) continue;
    auto [y, pmap] = specialize_curve(x, contracted);
    CHECK(is_quasistable_curve(y, pmap.map(p0), pushforward_curve_polarization(pmap, mu),
                               pushforward_curve_divisor(pmap, d)));
    ++done;
  }
}

namespace {

// beta for a subcurve given as (vertex set, edge subset of the induced
// edges): test-side generalization beyond vertex-induced subcurves.
Rat beta_subgraph(const RefinedModel& m, const CurvePolarization& mu, const CurveDivisor& d,
                  const std::vector<bool>& verts, const std::vector<bool>& edges) {
  const Graph& g = m.curve.model();
  Polarization gmu = polarization_on_model(m, mu);
  Divisor gd = divisor_on_model(m, d);
  Rat value = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (verts[v]) value += rat_of(gd[v]) - gmu.values[v];
  int boundary = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (edges[e]) continue;
    if (verts[g.edge(e).u]) ++boundary;
    if (verts[g.edge(e).v]) ++boundary;
  }
  return value + Rat(boundary) / 2;
}

}  // namespace

TEST_CASE("beta is modular on arbitrary subcurves") {
  // beta(Y n Z) + beta(Y u Z) = beta(Y) + beta(Z), with subcurves allowed to
  // omit edges between their vertices.
  Graph g({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}, {0});
  TropicalCurve x(g, std::vector<Rat>(4, Rat(1)));
  RefinedModel m = refine_at(x, {});
  CurvePolarization mu = make_curve_polarization(
      1, {{CurvePoint::at_vertex(0), make_rat(1, 3)}, {CurvePoint::at_vertex(2), make_rat(2, 3)}});
  CurveDivisor d;
  d.add(CurvePoint::at_vertex(0), 2);
  d.add(CurvePoint::at_vertex(1), -1);

  const int nv = g.num_vertices(), ne = g.num_edges();
  auto valid = [&](unsigned vm, unsigned em) {
    for (int e = 0; e < ne; ++e)
      if ((em >> e) & 1)
        if (!((vm >> g.edge(e).u) & 1) || !((vm >> g.edge(e).v) & 1)) return false;
    return true;
  };
  auto unpack = [&](unsigned vm, unsigned em) {
    std::vector<bool> V(nv), E(ne);
    for (int v = 0; v < nv; ++v) V[v] = (vm >> v) & 1;
    for (int e = 0; e < ne; ++e) E[e] = (em >> e) & 1;
    return std::pair(V, E);
  };
  std::vector<std::pair<unsigned, unsigned>> subcurves;
  for (unsigned vm = 0; vm < (1u << nv); ++vm)
    for (unsigned em = 0; em < (1u << ne); ++em)
      if (valid(vm, em)) subcurves.push_back({vm, em});
  for (auto [v1, e1] : subcurves)
    for (auto [v2, e2] : subcurves) {
      auto [Va, Ea] = unpack(v1, e1);
      auto [Vb, Eb] = unpack(v2, e2);
      auto [Vi, Ei] = unpack(v1 & v2, e1 & e2);
      auto [Vu, Eu] = unpack(v1 | v2, e1 | e2);
      CHECK(beta_subgraph(m, mu, d, Vi, Ei) + beta_subgraph(m, mu, d, Vu, Eu) ==
            beta_subgraph(m, mu, d, Va, Ea) + beta_subgraph(m, mu, d, Vb, Eb));
    }
}

namespace {

// Stable model: suppress valence-2 weight-0 leg-free vertices, merging the
// incident edges and adding lengths.
TropicalCurve stable_model(const TropicalCurve& x) {
  Graph g = x.model();
  std::vector<Rat> lengths = x.lengths();
  while (true) {
    int target = -1;
    for (int v = 0; v < g.num_vertices() && target < 0; ++v)
      if (valence(g, v) == 2 && g.weight(v) == 0 && g.num_legs_at(v) == 0) {
        // Skip loop vertices: a loop at v gives valence 2 but no suppression.
        bool loop = false;
        for (int e = 0; e < g.num_edges(); ++e)
          if (g.is_loop(e) && g.edge(e).u == v) loop = true;
        if (!loop) target = v;
      }
    if (target < 0) return TropicalCurve(g, lengths);
    std::vector<int> incident;
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edge(e).u == target || g.edge(e).v == target) incident.push_back(e);
    REQUIRE(incident.size() == 2);
    int ea = incident[0], eb = incident[1];
    int a = g.edge(ea).u == target ? g.edge(ea).v : g.edge(ea).u;
    int b = g.edge(eb).u == target ? g.edge(eb).v : g.edge(eb).u;
    Rat merged = lengths[ea] + lengths[eb];
    std::vector<Graph::Edge> edges;
    std::vector<Rat> new_lengths;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (e == ea || e == eb) continue;
      auto ed = g.edge(e);
      auto shift = [&](int v) { return v > target ? v - 1 : v; };
      edges.push_back({shift(ed.u), shift(ed.v)});
      new_lengths.push_back(lengths[e]);
    }
    auto shift = [&](int v) { return v > target ? v - 1 : v; };
    edges.push_back({shift(a), shift(b)});
    new_lengths.push_back(merged);
    std::vector<int> weights;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (v != target) weights.push_back(g.weight(v));
    std::vector<int> legs;
    for (int lv : g.legs()) legs.push_back(shift(lv));
    g = Graph(std::move(weights), std::move(edges), std::move(legs));
    lengths = std::move(new_lengths);
  }
}

}  // namespace

TEST_CASE("curve stability equals stability of the stable model") {
  // A theta curve presented on a subdivided model.
  Graph sub({0, 0, 0, 0}, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 1}}, {0});
  TropicalCurve x(sub, std::vector<Rat>(5, Rat(1)));
  CHECK(is_stable_curve(x) == is_stable(stable_model(x).model()));
  CHECK(is_stable_curve(x));

  // A segment with a subdivision point stays unstable either way.
  Graph seg({0, 0, 0}, {{0, 1}, {1, 2}}, {0});
  TropicalCurve s(seg, {Rat(1), Rat(1)});
  CHECK(is_stable_curve(s) == is_stable(stable_model(s).model()));
  CHECK_FALSE(is_stable_curve(s));

  // Weighted endpoints rescue it.
  Graph wseg({1, 0, 1}, {{0, 1}, {1, 2}}, {0});
  TropicalCurve w(wseg, {Rat(1), Rat(1)});
  CHECK(is_stable_curve(w) == is_stable(stable_model(w).model()));
  CHECK(is_stable_curve(w));
}

TEST_CASE("curve stability matches the pointwise rule") {
  CHECK(is_stable_curve(unit_theta()));
  Graph segment({0, 0}, {{0, 1}}, {0});
  CHECK_FALSE(is_stable_curve(TropicalCurve(segment, {Rat(1)})));
  Graph weighted({1, 1}, {{0, 1}}, {0});
  CHECK(is_stable_curve(TropicalCurve(weighted, {Rat(1)})));
  // A circle with the base point marked: one loop vertex of valence 2+leg.
  Graph loop({0}, {{0, 0}}, {0});
  CHECK(is_stable_curve(TropicalCurve(loop, {Rat(1)})));
}
