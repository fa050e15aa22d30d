#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tropjac/errors.hpp"

namespace tropjac {

// Finite connected multigraph with loops, nonnegative vertex weights and
// indexed legs. Vertices and edges are dense indices. Every edge is a pair
// of half-edges (2e anchored at u, 2e+1 at v), which keeps loops,
// orientations and automorphisms unambiguous.
class Graph {
 public:
  struct Edge {
    int u = -1, v = -1;
    bool operator==(const Edge&) const = default;
  };

  Graph() = default;
  Graph(std::vector<int> weights, std::vector<Edge> edges, std::vector<int> legs,
        bool allow_disconnected = false);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int weight(int v) const;
  const std::vector<int>& weights() const { return weights_; }
  Edge edge(int e) const;
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_loop(int e) const;
  // Leg index -> incident vertex; leg 0 marks v0.
  const std::vector<int>& legs() const { return legs_; }
  int num_legs_at(int v) const;
  bool has_legs() const { return !legs_.empty(); }
  int v0() const;
  bool is_connected() const { return connected_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
  std::vector<int> legs_;
  bool connected_ = true;
};

// An edge contraction Gamma -> Gamma' together with its vertex/edge maps.
struct Specialization {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;  // V(source) -> V(target), surjective
  std::vector<int> edge_map;    // E(source) -> E(target), -1 on contracted edges
  std::vector<int> kept_edges;  // E(target) -> E(source), injective

  static Specialization identity(const Graph& g);
  // Composition: this: A->B, next: B->C gives A->C.
  Specialization then(const Specialization& next) const;
  std::vector<int> contracted_edges() const;
};

// Per-edge source/target choice; the canonical orientation points each edge
// from its u half-edge to its v half-edge.
struct Orientation {
  std::vector<bool> forward;

  static Orientation canonical(const Graph& g);
  int source(const Graph& g, int e) const;
  int target(const Graph& g, int e) const;
};

// Incidence-, weight- and leg-preserving symmetry, recorded at half-edge
// granularity so loop flips are distinct elements.
struct GraphAutomorphism {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  std::vector<int> half_edge_perm;
};

int valence(const Graph& g, int v);
int valence(const Graph& g, int v, const std::vector<int>& edge_subset);
// |E(V, V^c)|; loops never cross a cut.
int delta(const Graph& g, const std::vector<int>& vertex_subset);
int betti(const Graph& g);
int genus(const Graph& g);
bool is_stable(const Graph& g);
bool is_tree_like(const Graph& g);

std::pair<Graph, Specialization> contract(const Graph& g, const std::vector<int>& edge_subset);
// Removes the edges, keeping all vertices; the flag reports connectivity of
// the result (the one place a disconnected Graph is produced).
std::pair<Graph, bool> delete_edges(const Graph& g, const std::vector<int>& edge_subset);

// Subdivision data: original vertices keep their indices, the exceptional
// vertex over the i-th subdivided edge (sorted) is n+i. Kept edges come
// first in original order, then the two halves of each subdivided edge
// (u-side, then v-side).
struct Subdivision {
  Graph graph;
  std::vector<int> subdivided;             // sorted
  std::vector<int> exceptional;            // per subdivided edge: new vertex
  std::vector<std::array<int, 2>> halves;  // per subdivided edge: {u-side, v-side} edge ids
  std::vector<int> new_edge_id;            // per original edge: new id for kept, -1 if subdivided

  int exceptional_vertex(int original_edge) const;
};
Subdivision subdivide(const Graph& g, const std::vector<int>& edge_subset);

// All spanning trees as kept-edge sets of size |V|-1, lexicographic.
std::vector<std::vector<int>> spanning_trees(const Graph& g);
bool is_spanning_tree(const Graph& g, const std::vector<int>& kept_edges);
// Sequence of spanning trees from `t_from` to `t_to`, consecutive ones
// differing by a single edge exchange.
std::vector<std::vector<int>> spanning_tree_path(const Graph& g, const std::vector<int>& t_from,
                                                 const std::vector<int>& t_to);

std::vector<GraphAutomorphism> automorphisms(const Graph& g);

// Canonical key of the (optionally vertex/edge colored) graph under vertex
// relabeling; parallel edges compare as color multisets. Equal keys iff
// colored-isomorphic.
std::vector<long long> canonical_key(const Graph& g,
                                     const std::vector<long long>* vertex_colors = nullptr,
                                     const std::vector<long long>* edge_colors = nullptr);
bool isomorphic(const Graph& a, const Graph& b);
// First isomorphism found: (vertex map a->b, edge map a->b).
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_isomorphism(const Graph& a,
                                                                              const Graph& b);

// Validates and normalizes a subset of edge (or vertex) ids: sorted, unique,
// in range.
std::vector<int> normalize_subset(const std::vector<int>& subset, int universe, const char* what);

}  // namespace tropjac
