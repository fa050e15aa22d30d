#include "tropjac/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tropjac/caps.hpp"

namespace tropjac {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as representative
    parent[b] = a;
    return true;
  }
};

bool compute_connected(int n, const std::vector<Graph::Edge>& edges) {
  if (n == 0) return false;
  UnionFind uf(n);
  int comps = n;
  for (const auto& e : edges)
    if (uf.unite(e.u, e.v)) --comps;
  return comps == 1;
}

}  // namespace

std::vector<int> normalize_subset(const std::vector<int>& subset, int universe, const char* what) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() != subset.size()) throw ValidationError(std::string(what) + ": duplicate ids");
  for (int x : s)
    if (x < 0 || x >= universe)
      throw ValidationError(std::string(what) + ": id " + std::to_string(x) + " out of range");
  return s;
}

Graph::Graph(std::vector<int> weights, std::vector<Edge> edges, std::vector<int> legs,
             bool allow_disconnected)
    : weights_(std::move(weights)), edges_(std::move(edges)), legs_(std::move(legs)) {
  const int n = num_vertices();
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  for (int w : weights_)
    if (w < 0) throw ValidationError("negative vertex weight");
  for (const auto& e : edges_)
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("edge endpoint out of range");
  for (int v : legs_)
    if (v < 0 || v >= n) throw ValidationError("leg vertex out of range");
  connected_ = compute_connected(n, edges_);
  if (!connected_ && !allow_disconnected) throw ValidationError("graph is not connected");
}

int Graph::weight(int v) const {
  if (v < 0 || v >= num_vertices()) throw ValidationError("unknown vertex id " + std::to_string(v));
  return weights_[v];
}

Graph::Edge Graph::edge(int e) const {
  if (e < 0 || e >= num_edges()) throw ValidationError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

bool Graph::is_loop(int e) const {
  Edge ed = edge(e);
  return ed.u == ed.v;
}

int Graph::num_legs_at(int v) const {
  int c = 0;
  for (int lv : legs_)
    if (lv == v) ++c;
  return c;
}

int Graph::v0() const {
  if (legs_.empty()) throw ValidationError("graph has no legs; v0 is undefined");
  return legs_[0];
}

Specialization Specialization::identity(const Graph& g) {
  Specialization s;
  s.source = g;
  s.target = g;
  s.vertex_map.resize(g.num_vertices());
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
  s.edge_map.resize(g.num_edges());
  std::iota(s.edge_map.begin(), s.edge_map.end(), 0);
  s.kept_edges = s.edge_map;
  return s;
}

Specialization Specialization::then(const Specialization& next) const {
  if (!(target == next.source))
    throw ValidationError("specializations do not compose: middle graphs differ");
  Specialization r;
  r.source = source;
  r.target = next.target;
  r.vertex_map.resize(vertex_map.size());
  for (size_t v = 0; v < vertex_map.size(); ++v) r.vertex_map[v] = next.vertex_map[vertex_map[v]];
  r.edge_map.assign(edge_map.size(), -1);
  for (size_t e = 0; e < edge_map.size(); ++e)
    if (edge_map[e] >= 0) r.edge_map[e] = next.edge_map[edge_map[e]];
  r.kept_edges.resize(next.kept_edges.size());
  for (size_t e = 0; e < next.kept_edges.size(); ++e)
    r.kept_edges[e] = kept_edges[next.kept_edges[e]];
  return r;
}

std::vector<int> Specialization::contracted_edges() const {
  std::vector<int> out;
  for (size_t e = 0; e < edge_map.size(); ++e)
    if (edge_map[e] < 0) out.push_back(static_cast<int>(e));
  return out;
}

Orientation Orientation::canonical(const Graph& g) {
  Orientation o;
  o.forward.assign(g.num_edges(), true);
  return o;
}

int Orientation::source(const Graph& g, int e) const {
  return forward[e] ? g.edge(e).u : g.edge(e).v;
}

int Orientation::target(const Graph& g, int e) const {
  return forward[e] ? g.edge(e).v : g.edge(e).u;
}

int valence(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices())
    throw ValidationError("unknown vertex id " + std::to_string(v));
  int c = 0;
  for (const auto& e : g.edges()) {
    if (e.u == v) ++c;
    if (e.v == v) ++c;
  }
  return c;
}

int valence(const Graph& g, int v, const std::vector<int>& edge_subset) {
  if (v < 0 || v >= g.num_vertices())
    throw ValidationError("unknown vertex id " + std::to_string(v));
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  int c = 0;
  for (int ei : subset) {
    auto e = g.edge(ei);
    if (e.u == v) ++c;
    if (e.v == v) ++c;
  }
  return c;
}

int delta(const Graph& g, const std::vector<int>& vertex_subset) {
  auto subset = normalize_subset(vertex_subset, g.num_vertices(), "vertex subset");
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : subset) in[v] = 1;
  int c = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) ++c;
  return c;
}

int betti(const Graph& g) {
  if (!g.is_connected()) throw ValidationError("betti number requires a connected graph");
  return g.num_edges() - g.num_vertices() + 1;
}

int genus(const Graph& g) {
  int w = std::accumulate(g.weights().begin(), g.weights().end(), 0);
  return w + betti(g);
}

bool is_stable(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (valence(g, v) + 2 * g.weight(v) + g.num_legs_at(v) < 3) return false;
  return true;
}

bool is_tree_like(const Graph& g) {
  int loops = 0;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) ++loops;
  return betti(g) == loops;
}

std::pair<Graph, Specialization> contract(const Graph& g, const std::vector<int>& edge_subset) {
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  const int n = g.num_vertices();
  UnionFind uf(n);
  for (int e : subset) uf.unite(g.edge(e).u, g.edge(e).v);

  // New vertices ordered by smallest original member.
  std::vector<int> rep_to_new(n, -1);
  std::vector<int> vertex_map(n);
  int nv = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (rep_to_new[r] < 0) rep_to_new[r] = nv++;
    vertex_map[v] = rep_to_new[r];
  }

  // Weight rule: w'(class) = sum of weights + b1 of the contracted piece.
  std::vector<int> new_weights(nv, 0);
  std::vector<int> class_size(nv, 0), class_edges(nv, 0);
  for (int v = 0; v < n; ++v) {
    new_weights[vertex_map[v]] += g.weight(v);
    ++class_size[vertex_map[v]];
  }
  for (int e : subset) ++class_edges[vertex_map[g.edge(e).u]];
  for (int c = 0; c < nv; ++c) new_weights[c] += class_edges[c] - (class_size[c] - 1);

  std::vector<char> contracted(g.num_edges(), 0);
  for (int e : subset) contracted[e] = 1;
  std::vector<Graph::Edge> new_edges;
  std::vector<int> edge_map(g.num_edges(), -1), kept;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (contracted[e]) continue;
    edge_map[e] = static_cast<int>(new_edges.size());
    kept.push_back(e);
    new_edges.push_back({vertex_map[g.edge(e).u], vertex_map[g.edge(e).v]});
  }
  std::vector<int> new_legs;
  for (int lv : g.legs()) new_legs.push_back(vertex_map[lv]);

  Specialization s;
  s.source = g;
  s.target = Graph(std::move(new_weights), std::move(new_edges), std::move(new_legs),
                   !g.is_connected());
  s.vertex_map = std::move(vertex_map);
  s.edge_map = std::move(edge_map);
  s.kept_edges = std::move(kept);
  return {s.target, s};
}

std::pair<Graph, bool> delete_edges(const Graph& g, const std::vector<int>& edge_subset) {
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  std::vector<char> removed(g.num_edges(), 0);
  for (int e : subset) removed[e] = 1;
  std::vector<Graph::Edge> new_edges;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!removed[e]) new_edges.push_back(g.edge(e));
  bool connected = compute_connected(g.num_vertices(), new_edges);
  Graph out(g.weights(), std::move(new_edges), g.legs(), /*allow_disconnected=*/true);
  return {std::move(out), connected};
}

int Subdivision::exceptional_vertex(int original_edge) const {
  auto it = std::lower_bound(subdivided.begin(), subdivided.end(), original_edge);
  if (it == subdivided.end() || *it != original_edge)
    throw ValidationError("edge " + std::to_string(original_edge) + " was not subdivided");
  return exceptional[it - subdivided.begin()];
}

Subdivision subdivide(const Graph& g, const std::vector<int>& edge_subset) {
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  Subdivision out;
  out.subdivided = subset;
  const int n = g.num_vertices();

  std::vector<int> weights = g.weights();
  std::vector<char> cut(g.num_edges(), 0);
  for (int e : subset) cut[e] = 1;

  std::vector<Graph::Edge> edges;
  out.new_edge_id.assign(g.num_edges(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (cut[e]) continue;
    out.new_edge_id[e] = static_cast<int>(edges.size());
    edges.push_back(g.edge(e));
  }
  for (size_t i = 0; i < subset.size(); ++i) {
    int e = subset[i];
    int x = n + static_cast<int>(i);
    out.exceptional.push_back(x);
    weights.push_back(0);
    int a = static_cast<int>(edges.size());
    edges.push_back({g.edge(e).u, x});
    edges.push_back({x, g.edge(e).v});
    out.halves.push_back({a, a + 1});
  }
  out.graph = Graph(std::move(weights), std::move(edges), g.legs(), !g.is_connected());
  return out;
}

bool is_spanning_tree(const Graph& g, const std::vector<int>& kept_edges) {
  auto kept = normalize_subset(kept_edges, g.num_edges(), "spanning tree");
  if (static_cast<int>(kept.size()) != g.num_vertices() - 1) return false;
  UnionFind uf(g.num_vertices());
  for (int e : kept)
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

std::vector<std::vector<int>> spanning_trees(const Graph& g) {
  if (!g.is_connected()) throw ValidationError("spanning trees require a connected graph");
  const int need = g.num_vertices() - 1;
  std::vector<int> non_loops;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!g.is_loop(e)) non_loops.push_back(e);

  std::vector<std::vector<int>> trees;
  std::vector<int> current;
  // Lexicographic enumeration over edge ids with a cycle check per pick.
  auto rec = [&](auto&& self, size_t from, UnionFind uf) -> void {
    if (static_cast<int>(current.size()) == need) {
      trees.push_back(current);
      return;
    }
    int remaining = need - static_cast<int>(current.size());
    for (size_t i = from; i + remaining <= non_loops.size(); ++i) {
      int e = non_loops[i];
      UnionFind next = uf;
      if (!next.unite(g.edge(e).u, g.edge(e).v)) continue;
      current.push_back(e);
      self(self, i + 1, std::move(next));
      current.pop_back();
    }
  };
  rec(rec, 0, UnionFind(g.num_vertices()));
  return trees;
}

namespace {

// Unique path between two vertices inside a tree given as a kept-edge set.
std::vector<int> tree_path_edges(const Graph& g, const std::vector<int>& tree, int from, int to) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices());
  for (int e : tree) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<int> parent_edge(g.num_vertices(), -1), parent(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        stack.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) {
    if (v < 0) throw InternalConsistencyError("tree path endpoints not connected");
    path.push_back(parent_edge[v]);
  }
  return path;
}

}  // namespace

std::vector<std::vector<int>> spanning_tree_path(const Graph& g, const std::vector<int>& t_from,
                                                 const std::vector<int>& t_to) {
  if (!is_spanning_tree(g, t_from) || !is_spanning_tree(g, t_to))
    throw ValidationError("spanning_tree_path: inputs are not spanning trees");
  std::vector<int> cur = normalize_subset(t_from, g.num_edges(), "tree");
  std::vector<int> goal = normalize_subset(t_to, g.num_edges(), "tree");
  std::vector<std::vector<int>> path = {cur};
  while (cur != goal) {
    // Smallest edge of goal \ cur closes a unique cycle with cur; swap it in
    // for a cycle edge outside goal (the proof's exchange step).
    int e = -1;
    for (int cand : goal)
      if (!std::binary_search(cur.begin(), cur.end(), cand)) {
        e = cand;
        break;
      }
    auto cycle = tree_path_edges(g, cur, g.edge(e).u, g.edge(e).v);
    int out = -1;
    std::sort(cycle.begin(), cycle.end());
    for (int cand : cycle)
      if (!std::binary_search(goal.begin(), goal.end(), cand)) {
        out = cand;
        break;
      }
    if (out < 0) throw InternalConsistencyError("tree exchange: no swappable edge on the cycle");
    cur.erase(std::find(cur.begin(), cur.end(), out));
    cur.push_back(e);
    std::sort(cur.begin(), cur.end());
    path.push_back(cur);
  }
  return path;
}

namespace {

// Multiset of edges per unordered vertex pair, loops under (v,v).
std::map<std::pair<int, int>, std::vector<int>> pair_classes(const Graph& g) {
  std::map<std::pair<int, int>, std::vector<int>> cls;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto ed = g.edge(e);
    cls[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  return cls;
}

// Backtracking over vertex bijections a->b compatible with weights, legs and
// pair multiplicities; calls sink for each full map.
template <typename Sink>
void for_each_vertex_iso(const Graph& a, const Graph& b, Sink&& sink) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.legs().size() != b.legs().size())
    return;
  auto amult = [&](int u, int v) {
    int c = 0;
    for (const auto& e : a.edges())
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++c;
    return c;
  };
  auto bmult = [&](int u, int v) {
    int c = 0;
    for (const auto& e : b.edges())
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++c;
    return c;
  };
  std::vector<int> map(n, -1), used(n, 0);
  auto legs_ok = [&](int va, int vb) {
    for (size_t i = 0; i < a.legs().size(); ++i) {
      if (a.legs()[i] == va && b.legs()[i] != vb) return false;
      if (b.legs()[i] == vb && a.legs()[i] != va) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      sink(map);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.weight(v) != b.weight(w) || valence(a, v) != valence(b, w) ||
          !legs_ok(v, w))
        continue;
      bool ok = amult(v, v) == bmult(w, w);
      for (int u = 0; ok && u < v; ++u)
        if (amult(u, v) != bmult(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      map[v] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<GraphAutomorphism> automorphisms(const Graph& g) {
  Caps caps = Caps::effective();
  if (g.num_vertices() > caps.automorphism)
    throw ValidationError("automorphism search cap exceeded (|V| > " +
                          std::to_string(caps.automorphism) + ")");
  auto classes = pair_classes(g);
  std::vector<GraphAutomorphism> out;

  for_each_vertex_iso(g, g, [&](const std::vector<int>& sigma) {
    // Per pair class, enumerate all bijections onto the image class, then
    // all loop flips.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;  // (src edges, dst edges)
    for (auto& [key, src] : classes) {
      auto [u, v] = key;
      std::pair<int, int> ikey{std::min(sigma[u], sigma[v]), std::max(sigma[u], sigma[v])};
      blocks.push_back({src, classes.at(ikey)});
    }
    std::vector<int> edge_perm(g.num_edges(), -1);
    auto emit = [&]() {
      // Half-edge map: determined for non-loops, both choices for loops.
      std::vector<int> loops;
      for (int e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e)) loops.push_back(e);
      int lf = static_cast<int>(loops.size());
      for (int flips = 0; flips < (1 << lf); ++flips) {
        GraphAutomorphism au;
        au.vertex_perm = sigma;
        au.edge_perm = edge_perm;
        au.half_edge_perm.assign(2 * g.num_edges(), -1);
        for (int e = 0; e < g.num_edges(); ++e) {
          int f = edge_perm[e];
          bool flip = false;
          if (g.is_loop(e)) {
            int idx = static_cast<int>(std::lower_bound(loops.begin(), loops.end(), e) -
                                       loops.begin());
            flip = (flips >> idx) & 1;
          } else {
            flip = (sigma[g.edge(e).u] != g.edge(f).u);
          }
          au.half_edge_perm[2 * e] = flip ? 2 * f + 1 : 2 * f;
          au.half_edge_perm[2 * e + 1] = flip ? 2 * f : 2 * f + 1;
        }
        out.push_back(std::move(au));
      }
    };
    auto rec = [&](auto&& self, size_t bi) -> void {
      if (bi == blocks.size()) {
        emit();
        return;
      }
      auto& [src, dst] = blocks[bi];
      std::vector<int> perm(dst);
      std::sort(perm.begin(), perm.end());
      do {
        for (size_t i = 0; i < src.size(); ++i) edge_perm[src[i]] = perm[i];
        self(self, bi + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
  });
  return out;
}

std::vector<long long> canonical_key(const Graph& g, const std::vector<long long>* vertex_colors,
                                     const std::vector<long long>* edge_colors) {
  const int n = g.num_vertices();
  auto encode = [&](const std::vector<int>& sigma) {
    // sigma: old vertex -> new label
    std::vector<long long> key;
    key.push_back(n);
    key.push_back(g.num_edges());
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[sigma[v]] = v;
    for (int lbl = 0; lbl < n; ++lbl) {
      int v = inv[lbl];
      key.push_back(g.weight(v));
      key.push_back(vertex_colors ? (*vertex_colors)[v] : 0);
    }
    for (size_t i = 0; i < g.legs().size(); ++i) key.push_back(sigma[g.legs()[i]]);
    std::map<std::pair<int, int>, std::vector<long long>> pairs;
    for (int e = 0; e < g.num_edges(); ++e) {
      auto ed = g.edge(e);
      int a = sigma[ed.u], b = sigma[ed.v];
      pairs[{std::min(a, b), std::max(a, b)}].push_back(edge_colors ? (*edge_colors)[e] : 0);
    }
    for (auto& [pr, colors] : pairs) {
      std::sort(colors.begin(), colors.end());
      key.push_back(pr.first);
      key.push_back(pr.second);
      key.push_back(static_cast<long long>(colors.size()));
      for (long long c : colors) key.push_back(c);
    }
    return key;
  };

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<long long> best;
  // Minimum encoding over all relabelings. Graphs passed here are small by
  // construction (catalog representatives, test graphs).
  std::vector<int> perm(sigma);
  do {
    auto key = encode(perm);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_isomorphism(const Graph& a,
                                                                              const Graph& b) {
  std::optional<std::vector<int>> found;
  for_each_vertex_iso(a, b, [&](const std::vector<int>& sigma) {
    if (!found) found = sigma;
  });
  if (!found) return std::nullopt;
  // Deterministic edge map: within each pair class, match edges in id order.
  auto bcls = pair_classes(b);
  std::map<std::pair<int, int>, size_t> taken;
  std::vector<int> edge_map(a.num_edges(), -1);
  for (int e = 0; e < a.num_edges(); ++e) {
    auto ed = a.edge(e);
    int u = (*found)[ed.u], v = (*found)[ed.v];
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    edge_map[e] = bcls.at(key)[taken[key]++];
  }
  return std::make_pair(*found, edge_map);
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace tropjac
