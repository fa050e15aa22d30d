#include <doctest.h>


#include <set>
#include "helpers.hpp"
#include "tropjac/exact_linalg.hpp"
#include "tropjac/qd_poset.hpp"

using namespace tropjac;
using tjtest::theta;

TEST_CASE("theta poset structure") {
  Graph t = theta();
  QDPoset p = build_qd_poset(t, 0, zero_polarization(t));
  CHECK(p.elements.size() == 12);
  auto [ranked, length] = verify_ranked(p);
  CHECK(ranked);
  CHECK(length == 2);
  CHECK(verify_connected_codim1(p));
  CHECK(p.maximal_elements().size() == 3);

  // The zero divisor lies under all six rank-1 elements.
  int zero_idx = p.index_of(as_pseudo_divisor(Divisor({0, 0})));
  REQUIRE(zero_idx >= 0);
  int parents = 0;
  for (auto [par, chi] : p.cover_pairs())
    if (chi == zero_idx) ++parents;
  CHECK(parents == 6);
}

TEST_CASE("single loop poset") {
  Graph loop({0}, {{0, 0}}, {0});
  QDPoset p = build_qd_poset(loop, 0, zero_polarization(loop));
  REQUIRE(p.elements.size() == 2);
  CHECK(p.elements[0] == as_pseudo_divisor(Divisor({0})));
  CHECK(p.elements[1] == make_pseudo_divisor(loop, {0}, Divisor({1, -1})));
  // Both endpoint contractions of the loop give the same cover.
  CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(p.covers.size() == 2);
}

TEST_CASE("tree poset is a point") {
  Graph path({0, 0, 0}, {{0, 1}, {1, 2}}, {0});
  QDPoset p = build_qd_poset(path, 0, zero_polarization(path));
  CHECK(p.elements.size() == 1);
  auto [ranked, length] = verify_ranked(p);
  CHECK(ranked);
  CHECK(length == 0);
  CHECK(verify_connected_codim1(p));
}

TEST_CASE("cycle posets are 2n-gons") {
  for (int n = 2; n <= 5; ++n) {
    Graph c = tjtest::cycle(n);
    QDPoset p = build_qd_poset(c, 0, zero_polarization(c));
    CHECK(p.elements.size() == 2 * static_cast<size_t>(n));
    auto [ranked, length] = verify_ranked(p);
    CHECK(ranked);
    CHECK(length == 1);
    CHECK(verify_connected_codim1(p));
    // Alternating maximal/minimal: every maximal covers two minima, every
    // minimum is covered twice.
    std::vector<int> down(p.elements.size(), 0), up(p.elements.size(), 0);
    for (auto [par, chi] : p.cover_pairs()) {
      ++down[par];
      ++up[chi];
    }
    for (size_t i = 0; i < p.elements.size(); ++i) {
      if (p.ranks[i] == 1) CHECK(down[i] == 2);
      if (p.ranks[i] == 0) CHECK(up[i] == 2);
    }
  }
}

TEST_CASE("graded covers and maximal element counts") {
  tjtest::Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = tjtest::random_connected_multigraph(rng, 5, 8);
    Polarization mu = tjtest::random_polarization(rng, g, 2, 4);
    QDPoset p = build_qd_poset(g, g.v0(), mu);
    for (const auto& c : p.covers) CHECK(p.ranks[c.parent] == p.ranks[c.child] + 1);
    CHECK(Int(static_cast<long>(p.maximal_elements().size())) == matrix_tree_count(g));
    auto [ranked, length] = verify_ranked(p);
    CHECK(ranked);
    CHECK(length == betti(g));
    CHECK(verify_connected_codim1(p));
  }
}

TEST_CASE("poset pushforward certificates") {
  Graph t = theta();
  Polarization zero = zero_polarization(t);
  QDPoset src = build_qd_poset(t, 0, zero);
  auto [h, spec] = contract(t, {0});
  QDPoset tgt = build_qd_poset(h, 0, pushforward_polarization(spec, zero));
  PushforwardCertificate cert = poset_pushforward(spec, src, tgt);
  CHECK(cert.order_preserving);
  CHECK(cert.closed);
  CHECK(cert.surjective);

  PushforwardCertificate id_cert =
      poset_pushforward(Specialization::identity(t), src, src);
  CHECK(id_cert.bijective);
  CHECK(id_cert.order_isomorphism);
  for (size_t i = 0; i < id_cert.map.size(); ++i) CHECK(id_cert.map[i] == static_cast<int>(i));
}

TEST_CASE("separating edge contraction is an order isomorphism") {
  // Two triangles sharing a bridge.
  Graph g({0, 0, 0, 0, 0, 0},
          {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}, {0});
  Polarization mu = make_polarization(0, std::vector<Rat>(6, Rat(0)));
  auto [h, spec] = contract(g, {3});
  QDPoset src = build_qd_poset(g, 0, mu);
  QDPoset tgt = build_qd_poset(h, 0, pushforward_polarization(spec, mu));
  PushforwardCertificate cert = poset_pushforward(spec, src, tgt);
  CHECK(cert.bijective);
  CHECK(cert.order_isomorphism);
}

TEST_CASE("deletion embeds the smaller poset as the upper set") {
  // Elements containing a nondisconnecting E are exactly the image of the
  // poset of Gamma_E under E-augmentation.
  tjtest::Rng rng(79);
  int done = 0;
  while (done < 15) {
    Graph g = tjtest::random_connected_multigraph(rng, 5, 7);
    if (g.num_edges() == 0) continue;
    std::vector<int> subset;
    for (int e = 0; e < g.num_edges(); ++e)
      if (tjtest::pick(rng, 0, 2) == 0) subset.push_back(e);
    auto [gdel, connected] = delete_edges(g, subset);
    if (!connected || subset.empty()) continue;
    Polarization mu = tjtest::random_polarization(rng, g, 2, 4);
    Polarization mu_del = deletion_polarization(g, mu, subset);

    auto inner = enumerate_quasistable(gdel, g.v0(), mu_del);
    auto outer = enumerate_quasistable(g, g.v0(), mu);
    // kappa: (E', D') -> (E' u E, D), reading gdel's edges inside g.
    std::set<PseudoDivisor> image;
    for (const auto& pd : inner) {
      std::vector<int> edges = subset;
      std::vector<char> removed(g.num_edges(), 0);
      for (int e : subset) removed[e] = 1;
      std::vector<int> kept;
      for (int e = 0; e < g.num_edges(); ++e)
        if (!removed[e]) kept.push_back(e);
      for (int e : pd.edges) edges.push_back(kept[e]);
      std::sort(edges.begin(), edges.end());
      std::vector<long long> vals(pd.div.values().begin(),
                                  pd.div.values().begin() + g.num_vertices());
      vals.resize(g.num_vertices() + edges.size(), -1);
      image.insert(PseudoDivisor{std::move(edges), Divisor(std::move(vals))});
    }
    std::set<PseudoDivisor> containing;
    for (const auto& pd : outer) {
      bool contains_all = true;
      for (int e : subset)
        if (!std::binary_search(pd.edges.begin(), pd.edges.end(), e)) contains_all = false;
      if (contains_all) containing.insert(pd);
    }
    CHECK(image == containing);
    ++done;
  }
}
