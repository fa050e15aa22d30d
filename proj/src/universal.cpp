#include "tropjac/universal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropjac {

namespace {

// Labeled stable candidates: every connected stable weighted multigraph with
// one leg on nv <= 2g-1 vertices, edge count forced by the genus.
template <typename Sink>
void for_each_labeled_stable(int genus, Sink&& sink) {
  for (int nv = 1; nv <= 2 * genus - 1; ++nv) {
    std::vector<Graph::Edge> slots;  // unordered vertex pairs, loops included
    for (int a = 0; a < nv; ++a)
      for (int b = a; b < nv; ++b) slots.push_back({a, b});

    std::vector<int> w(nv, 0);
    std::vector<int> counts(slots.size(), 0);

    auto emit = [&]() {
      std::vector<Graph::Edge> edges;
      std::vector<int> val(nv, 0);
      for (size_t k = 0; k < slots.size(); ++k)
        for (int c = 0; c < counts[k]; ++c) {
          edges.push_back(slots[k]);
          val[slots[k].u] += slots[k].u == slots[k].v ? 2 : 1;
          if (slots[k].u != slots[k].v) ++val[slots[k].v];
        }
      for (int leg = 0; leg < nv; ++leg) {
        bool stable = true;
        for (int v = 0; v < nv && stable; ++v)
          if (val[v] + 2 * w[v] + (v == leg ? 1 : 0) < 3) stable = false;
        if (!stable) continue;
        try {
          sink(Graph(w, edges, {leg}));
        } catch (const ValidationError&) {
          // disconnected
        }
      }
    };
    auto edges_rec = [&](auto&& self, size_t s, int left) -> void {
      if (s == slots.size()) {
        if (left == 0) emit();
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[s] = c;
        self(self, s + 1, left - c);
      }
      counts[s] = 0;
    };
    auto weights_rec = [&](auto&& self, int v, int wsum) -> void {
      if (v == nv) {
        int ne = genus - wsum + nv - 1;
        if (ne >= 0) edges_rec(edges_rec, 0, ne);
        return;
      }
      for (int x = 0; wsum + x <= genus; ++x) {
        w[v] = x;
        self(self, v + 1, wsum + x);
      }
      w[v] = 0;
    };
    weights_rec(weights_rec, 0, 0);
  }
}

// Distinct vertex permutations underlying Aut(g).
std::vector<std::vector<int>> vertex_automorphisms(const Graph& g) {
  std::set<std::vector<int>> perms;
  for (const GraphAutomorphism& au : automorphisms(g)) perms.insert(au.vertex_perm);
  return {perms.begin(), perms.end()};
}

PseudoDivisor transport_pseudo(const Graph& g, const PseudoDivisor& pd,
                               const std::vector<int>& sigma) {
  // Parallel edges are interchangeable: transport the edge set class-wise,
  // picking lowest ids in each image class.
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto ed = g.edge(e);
    classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  std::map<std::pair<int, int>, int> need;
  for (int e : pd.edges) {
    auto ed = g.edge(e);
    int a = sigma[ed.u], b = sigma[ed.v];
    ++need[{std::min(a, b), std::max(a, b)}];
  }
  std::vector<int> edges;
  for (const auto& [key, cnt] : need) {
    const auto& cls = classes.at(key);
    for (int k = 0; k < cnt; ++k) edges.push_back(cls[k]);
  }
  std::sort(edges.begin(), edges.end());

  const int n = g.num_vertices();
  std::vector<long long> vals(n + edges.size(), -1);
  for (int v = 0; v < n; ++v) vals[sigma[v]] = pd.div[v];
  return PseudoDivisor{std::move(edges), Divisor(std::move(vals))};
}

}  // namespace

PseudoDivisor canonical_pseudo_divisor(const Graph& g, const PseudoDivisor& pd) {
  validate_pseudo_divisor(g, pd);
  PseudoDivisor best = pd;
  for (const auto& sigma : vertex_automorphisms(g)) {
    PseudoDivisor t = transport_pseudo(g, pd, sigma);
    if (t < best) best = t;
  }
  return best;
}

StableGraphCatalog enumerate_stable_graphs(int genus) {
  if (genus < 0 || genus > 3)
    throw ValidationError("stable graph catalog supports 0 <= genus <= 3");
  StableGraphCatalog cat;
  cat.genus = genus;
  if (genus == 0) return cat;

  std::map<std::vector<long long>, Graph> by_key;
  for_each_labeled_stable(genus, [&](const Graph& g) {
    auto key = canonical_key(g);
    by_key.emplace(std::move(key), g);
  });
  for (auto& [key, g] : by_key) cat.classes.push_back(g);

  std::map<std::vector<long long>, int> class_of;
  for (size_t i = 0; i < cat.classes.size(); ++i)
    class_of[canonical_key(cat.classes[i])] = static_cast<int>(i);

  for (size_t i = 0; i < cat.classes.size(); ++i) {
    const Graph& g = cat.classes[i];
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [h, spec] = contract(g, {e});
      auto it = class_of.find(canonical_key(h));
      if (it == class_of.end())
        throw InternalConsistencyError("contraction of a stable graph left the catalog");
      int j = it->second;
      auto iso = find_isomorphism(h, cat.classes[j]);
      if (!iso) throw InternalConsistencyError("canonical keys matched but no isomorphism found");
      Specialization to_rep;
      to_rep.source = h;
      to_rep.target = cat.classes[j];
      to_rep.vertex_map = iso->first;
      to_rep.edge_map = iso->second;
      to_rep.kept_edges.assign(cat.classes[j].num_edges(), -1);
      for (int k = 0; k < h.num_edges(); ++k) to_rep.kept_edges[iso->second[k]] = k;
      cat.arrows.push_back({static_cast<int>(i), j, e, spec.then(to_rep)});
    }
  }
  return cat;
}

int count_stable_graphs_oracle(int genus) {
  if (genus < 0 || genus > 2)
    throw ValidationError("the pairwise-isomorphism oracle is limited to genus <= 2");
  std::vector<Graph> reps;
  for_each_labeled_stable(genus, [&](const Graph& g) {
    for (const Graph& r : reps)
      if (isomorphic(g, r)) return;
    reps.push_back(g);
  });
  return static_cast<int>(reps.size());
}

Polarization universal_polarization(PolarizationFamily family, const Graph& g, long long d) {
  switch (family) {
    case PolarizationFamily::Canonical:
      return canonical_polarization(g, d);
    case PolarizationFamily::V0Concentrated:
      return v0_concentrated_polarization(g, d);
  }
  throw ValidationError("unknown polarization family");
}

int UniversalQD::index_of(int cls, const PseudoDivisor& pd) const {
  PseudoDivisor canon = canonical_pseudo_divisor(catalog.classes.at(cls), pd);
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].cls == cls && elements[i].pd == canon) return static_cast<int>(i);
  return -1;
}

UniversalQD build_universal_qd(int genus, PolarizationFamily family, long long d) {
  UniversalQD u;
  u.genus = genus;
  u.degree = d;
  u.family = family;
  u.catalog = enumerate_stable_graphs(genus);

  std::vector<QDPoset> posets;
  std::vector<std::vector<int>> to_universal;  // per class, poset idx -> element idx
  std::map<std::pair<int, PseudoDivisor>, int> ids;

  for (size_t i = 0; i < u.catalog.classes.size(); ++i) {
    const Graph& g = u.catalog.classes[i];
    Polarization mu = universal_polarization(family, g, d);
    posets.push_back(build_qd_poset(g, g.v0(), mu));
    std::vector<int> local;
    for (const PseudoDivisor& pd : posets.back().elements) {
      PseudoDivisor canon = canonical_pseudo_divisor(g, pd);
      auto key = std::make_pair(static_cast<int>(i), canon);
      auto it = ids.find(key);
      if (it == ids.end()) {
        int idx = static_cast<int>(u.elements.size());
        u.elements.push_back(
            {static_cast<int>(i), canon,
             g.num_edges() + static_cast<int>(canon.edges.size())});
        it = ids.emplace(std::move(key), idx).first;
      }
      local.push_back(it->second);
    }
    to_universal.push_back(std::move(local));
  }

  std::set<std::pair<int, int>> covers;
  for (size_t i = 0; i < posets.size(); ++i)
    for (auto [p, c] : posets[i].cover_pairs())
      covers.insert({to_universal[i][p], to_universal[i][c]});

  for (const auto& arrow : u.catalog.arrows) {
    const QDPoset& src = posets[arrow.from];
    // A universal polarization must push forward to the target's; this is
    // the compatibility built into both families.
    Polarization pushed = pushforward_polarization(arrow.spec, src.mu);
    if (pushed.values != posets[arrow.to].mu.values)
      throw InternalConsistencyError("polarization family is not specialization-compatible");
    for (size_t p = 0; p < src.elements.size(); ++p) {
      const PseudoDivisor& pd = src.elements[p];
      if (std::binary_search(pd.edges.begin(), pd.edges.end(), arrow.edge))
        continue;  // contracting inside E drops dimension by two
      PseudoDivisor img = pushforward_pseudo(arrow.spec, pd);
      int j = posets[arrow.to].index_of(img);
      if (j < 0)
        throw InternalConsistencyError("cross-graph pushforward left the universal poset");
      covers.insert({to_universal[arrow.from][p], to_universal[arrow.to][j]});
    }
  }
  u.covers.assign(covers.begin(), covers.end());
  return u;
}

UniversalReport verify_universal_theorems(const UniversalQD& u) {
  UniversalReport rep;
  rep.expected_dimension = 4 * u.genus - 2;

  std::vector<char> has_parent(u.elements.size(), 0);
  for (auto [p, c] : u.covers) has_parent[c] = 1;
  std::vector<int> maximal;
  for (size_t i = 0; i < u.elements.size(); ++i)
    if (!has_parent[i]) maximal.push_back(static_cast<int>(i));

  rep.pure_dimension = true;
  for (int m : maximal)
    if (u.elements[m].dim != rep.expected_dimension) {
      rep.pure_dimension = false;
      rep.violations.push_back("maximal element of dimension " +
                               std::to_string(u.elements[m].dim));
    }

  // Connectivity through shared codimension-1 covers.
  rep.codim1_connected = true;
  if (maximal.size() > 1) {
    std::vector<int> comp(u.elements.size(), -1);
    std::vector<int> stack = {maximal[0]};
    comp[maximal[0]] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [p, c] : u.covers) {
        if (p != x || u.elements[c].dim != rep.expected_dimension - 1) continue;
        for (auto [p2, c2] : u.covers)
          if (c2 == c && comp[p2] < 0) {
            comp[p2] = 0;
            stack.push_back(p2);
          }
      }
    }
    for (int m : maximal)
      if (comp[m] < 0) {
        rep.codim1_connected = false;
        rep.violations.push_back("maximal element " + std::to_string(m) +
                                 " unreachable in codimension 1");
      }
  }

  rep.forgetful_order_preserving = true;
  for (auto [p, c] : u.covers) {
    int cp = u.elements[p].cls, cc = u.elements[c].cls;
    if (cp == cc) continue;
    bool arrow = false;
    for (const auto& a : u.catalog.arrows)
      if (a.from == cp && a.to == cc) arrow = true;
    if (!arrow) {
      rep.forgetful_order_preserving = false;
      rep.violations.push_back("cover crosses classes without a catalog arrow");
    }
  }
  return rep;
}

}  // namespace tropjac
