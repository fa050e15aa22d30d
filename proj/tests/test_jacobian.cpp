#include <doctest.h>

#include "helpers.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/reduction.hpp"

using namespace tropjac;
using tjtest::theta;

namespace {

TropicalCurve unit_theta() { return TropicalCurve(theta(), {Rat(1), Rat(1), Rat(1)}); }

TropicalCurve circle() {
  Graph loop({0}, {{0, 0}}, {0});
  return TropicalCurve(loop, {Rat(1)});
}

}  // namespace

TEST_CASE("jacobian complex of the unit theta curve") {
  JacobianComplex c =
      build_jacobian_complex(unit_theta(), CurvePoint::at_vertex(0), CurvePolarization{});
  CHECK(f_vector(c) == std::vector<long long>{3, 6, 3});
  CHECK(euler_characteristic(c) == 0);
  for (const auto& cell : c.cells)
    for (const Rat& side : cell.side_lengths) CHECK(side == Rat(1));
  // Top cells sit over spanning-tree complements.
  int top = 0;
  for (const auto& cell : c.cells)
    if (cell.edges.size() == 2) ++top;
  CHECK(Int(top) == matrix_tree_count(theta()));
}

TEST_CASE("jacobian complex of circle and tree curves") {
  JacobianComplex c =
      build_jacobian_complex(circle(), CurvePoint::at_vertex(0), CurvePolarization{});
  CHECK(f_vector(c) == std::vector<long long>{1, 1});
  CHECK(euler_characteristic(c) == 0);

  Graph path({0, 0}, {{0, 1}}, {0});
  TropicalCurve segment(path, {Rat(2)});
  JacobianComplex pc =
      build_jacobian_complex(segment, CurvePoint::at_vertex(0), CurvePolarization{});
  CHECK(f_vector(pc) == std::vector<long long>{1});
  CHECK(euler_characteristic(pc) == 1);
}

TEST_CASE("euler characteristic vanishes for positive genus") {
  tjtest::Rng rng(97);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = tjtest::random_connected_multigraph(rng, 4, 6);
    if (betti(g) == 0) continue;
    std::vector<Rat> lengths(g.num_edges());
    for (Rat& l : lengths) l = make_rat(tjtest::pick(rng, 1, 4), tjtest::pick(rng, 1, 3));
    TropicalCurve x(g, lengths);
    JacobianComplex c =
        build_jacobian_complex(x, CurvePoint::at_vertex(g.v0()), CurvePolarization{});
    CHECK(euler_characteristic(c) == 0);
  }
}

TEST_CASE("face maps agree with poset covers") {
  JacobianComplex c =
      build_jacobian_complex(unit_theta(), CurvePoint::at_vertex(0), CurvePolarization{});
  for (const JacobianFace& f : c.faces) {
    const JacobianCell& big = c.cells[f.cell];
    const JacobianCell& small = c.cells[f.subcell];
    CHECK(big.edges.size() == small.edges.size() + 1);
    // The pinned coordinate is the one that leaves the edge set.
    std::vector<int> remaining;
    for (int e : big.edges)
      if (e != f.edge) remaining.push_back(e);
    CHECK(remaining == small.edges);
  }
  // A 2-cell has four faces (two coordinates, two ends each).
  for (const auto& cell : c.cells) {
    if (cell.edges.size() != 2) continue;
    int count = 0;
    for (const JacobianFace& f : c.faces)
      if (f.cell == cell.element) ++count;
    CHECK(count == 4);
  }
}

TEST_CASE("abel-jacobi basics") {
  TropicalCurve x = circle();
  RefinedModel base = refine_at(x, {});
  PeriodData pd = make_period_data(base, 0);
  REQUIRE(pd.cycles.size() == 1);
  CHECK(pd.gram[0][0] == Rat(1));

  CurveDivisor at_base;
  at_base.add(CurvePoint::at_vertex(0), 3);
  CHECK(abel_jacobi(pd, at_base) == std::vector<Rat>{Rat(0)});

  CurveDivisor third;
  third.add(CurvePoint::on_edge(0, make_rat(1, 3)), 1);
  CurveDivisor two_thirds;
  two_thirds.add(CurvePoint::on_edge(0, make_rat(2, 3)), 1);
  CHECK(abel_jacobi(pd, third) == std::vector<Rat>{make_rat(1, 3)});
  CHECK_FALSE(jacobian_equivalent(pd, third, two_thirds));
  CHECK(jacobian_equivalent(pd, third, third));
}

TEST_CASE("chip firing lands in the period lattice") {
  tjtest::Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = tjtest::random_connected_multigraph(rng, 4, 7);
    if (betti(g) == 0) continue;
    std::vector<Rat> lengths(g.num_edges());
    for (Rat& l : lengths) l = make_rat(tjtest::pick(rng, 1, 5), tjtest::pick(rng, 1, 4));
    TropicalCurve x(g, lengths);
    RefinedModel base = refine_at(x, {});
    PeriodData pd = make_period_data(base, 0);

    CurveDivisor d;
    d.add(CurvePoint::at_vertex(tjtest::pick(rng, 0, g.num_vertices() - 1)), 1);
    d.add(CurvePoint::at_vertex(tjtest::pick(rng, 0, g.num_vertices() - 1)), -1);

    std::vector<bool> y(g.num_vertices(), false);
    y[tjtest::pick(rng, 0, g.num_vertices() - 1)] = true;
    auto out = out_set(base, y);
    if (out.empty()) continue;
    Rat ell = base.curve.length(out[0]);
    for (int e : out) ell = std::min(ell, base.curve.length(e));
    CurveDivisor fired = chip_firing_divisor(base, y, ell);
    CHECK(fired.degree() == 0);
    CHECK(jacobian_equivalent(pd, d, d + fired));
  }
}

TEST_CASE("verdicts are independent of the spanning tree and base choices") {
  Graph g = theta();
  TropicalCurve x(g, {make_rat(1, 2), Rat(1), make_rat(3, 2)});
  RefinedModel base = refine_at(x, {});
  auto trees = spanning_trees(g);
  REQUIRE(trees.size() == 3);

  CurveDivisor a, b;
  a.add(CurvePoint::on_edge(1, make_rat(1, 3)), 1);
  a.add(CurvePoint::at_vertex(0), -1);
  b.add(CurvePoint::on_edge(2, make_rat(5, 4)), 1);
  b.add(CurvePoint::at_vertex(1), -1);
  std::vector<bool> verdicts;
  for (const auto& tree : trees)
    for (int root = 0; root < 2; ++root)
      verdicts.push_back(jacobian_equivalent(make_period_data(base, root, &tree), a, b));
  for (bool v : verdicts) CHECK(v == verdicts[0]);
}

TEST_CASE("cell points are pairwise inequivalent across open cells") {
  JacobianComplex c =
      build_jacobian_complex(unit_theta(), CurvePoint::at_vertex(0), CurvePolarization{});
  PeriodData pd = make_period_data(c.model, 0);
  std::vector<CurveDivisor> pts;
  for (size_t i = 0; i < c.cells.size(); ++i) {
    std::vector<Rat> offsets;
    for (const Rat& side : c.cells[i].side_lengths) offsets.push_back(side / 3);
    pts.push_back(cell_point_divisor(c, static_cast<int>(i), offsets));
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      CHECK_FALSE(jacobian_equivalent(pd, pts[i], pts[j]));
}

TEST_CASE("endpoint specializations differ by a full-edge period") {
  // The two endpoint contractions of an exceptional edge yield divisors
  // whose Abel-Jacobi images differ by the integral over that edge, up to
  // the period lattice: moving the -1 across the whole segment closes a
  // cycle with the tree path between the endpoints.
  tjtest::Rng rng(113);
  int done = 0;
  while (done < 20) {
    Graph g = tjtest::random_connected_multigraph(rng, 4, 6);
    if (betti(g) == 0) continue;
    TropicalCurve x(g, std::vector<Rat>(g.num_edges(), Rat(1)));
    RefinedModel base = refine_at(x, {});
    PeriodData pd = make_period_data(base, 0);
    auto qd = enumerate_quasistable(g, g.v0(), zero_polarization(g));
    for (const auto& elem : qd) {
      for (int e : elem.edges) {
        if (g.is_loop(e)) continue;
        PseudoDivisor cu = specialize_pseudo_on_fixed_graph(g, elem, e, 0);
        PseudoDivisor cv = specialize_pseudo_on_fixed_graph(g, elem, e, 1);
        // Toward-u absorbs the -1 at u, so the lifts differ by delta_v - delta_u.
        Divisor diff_expected = Divisor::zero(g.num_vertices());
        diff_expected[g.edge(e).u] -= 1;
        diff_expected[g.edge(e).v] += 1;
        Divisor cu_v(std::vector<long long>(cu.div.values().begin(),
                                            cu.div.values().begin() + g.num_vertices()));
        Divisor cv_v(std::vector<long long>(cv.div.values().begin(),
                                            cv.div.values().begin() + g.num_vertices()));
        CHECK(cu_v - cv_v == diff_expected);

        auto to_curve = [&](const Divisor& d) {
          CurveDivisor out;
          for (int v = 0; v < d.size(); ++v)
            if (d[v] != 0) out.add(CurvePoint::at_vertex(v), d[v]);
          return out;
        };
        std::vector<Rat> tu = abel_jacobi(pd, to_curve(cu_v));
        std::vector<Rat> tv = abel_jacobi(pd, to_curve(cv_v));
        const int gn = static_cast<int>(pd.cycles.size());
        RatMatrix gm(gn, gn);
        for (int i = 0; i < gn; ++i)
          for (int j = 0; j < gn; ++j) gm.at(i, j) = pd.gram[i][j];
        std::vector<Rat> rhs(gn);
        for (int i = 0; i < gn; ++i)
          rhs[i] = tv[i] - tu[i] + x.length(e) * Rat(pd.cycles[i][e]);
        auto sol = solve_rational(gm, rhs);
        REQUIRE(sol.has_value());
        for (const Rat& c : sol->x) CHECK(c.get_den() == 1);
      }
    }
    ++done;
  }
}

TEST_CASE("cell coordinates round-trip through induced pseudo-divisors") {
  TropicalCurve x(theta(), {make_rat(1, 2), Rat(1), make_rat(3, 2)});
  CurvePolarization mu;
  CurvePoint p0 = CurvePoint::at_vertex(0);
  JacobianComplex c = build_jacobian_complex(x, p0, mu);
  for (size_t i = 0; i < c.cells.size(); ++i) {
    std::vector<Rat> offsets;
    for (const Rat& side : c.cells[i].side_lengths) offsets.push_back(side * make_rat(2, 5));
    CurveDivisor d = cell_point_divisor(c, static_cast<int>(i), offsets);
    InducedPseudoDivisor ind = induced_pseudo_divisor(x, p0, mu, d);
    CHECK(ind.pd == c.poset.elements[c.cells[i].element]);
    REQUIRE(ind.offsets.size() == offsets.size());
    for (size_t k = 0; k < offsets.size(); ++k) {
      CHECK(ind.offsets[k].first == c.cells[i].edges[k]);
      CHECK(ind.offsets[k].second == offsets[k]);
    }
  }
}

TEST_CASE("gram matrix is positive definite") {
  tjtest::Rng rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = tjtest::random_connected_multigraph(rng, 5, 8);
    std::vector<Rat> lengths(g.num_edges());
    for (Rat& l : lengths) l = make_rat(tjtest::pick(rng, 1, 6), tjtest::pick(rng, 1, 5));
    TropicalCurve x(g, lengths);
    // Construction itself certifies positive definiteness.
    make_period_data(refine_at(x, {}), 0);
  }
}
