#pragma once

#include <random>

#include "tropjac/graph.hpp"
#include "tropjac/polarization.hpp"

namespace tjtest {

using tropjac::Graph;
using tropjac::Polarization;
using tropjac::Rat;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Two vertices joined by three parallel edges, leg at vertex 0.
inline Graph theta() { return Graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {0}); }

inline Graph cycle(int n) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(std::vector<int>(n, 0), std::move(edges), {0});
}

// Two loops joined by a bridge.
inline Graph dumbbell() { return Graph({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {0}); }

inline Graph random_connected_multigraph(Rng& rng, int max_v, int max_e) {
  int nv = pick(rng, 1, max_v);
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < nv; ++v) edges.push_back({pick(rng, 0, v - 1), v});
  int extra = pick(rng, 0, std::max(0, max_e - (nv - 1)));
  for (int k = 0; k < extra; ++k) edges.push_back({pick(rng, 0, nv - 1), pick(rng, 0, nv - 1)});
  return Graph(std::vector<int>(nv, 0), std::move(edges), {pick(rng, 0, nv - 1)});
}

inline Polarization random_polarization(Rng& rng, const Graph& g, int max_abs_degree,
                                        int max_den) {
  long long d = pick(rng, -max_abs_degree, max_abs_degree);
  std::vector<Rat> vals(g.num_vertices(), Rat(0));
  Rat sum = 0;
  for (int v = 0; v + 1 < g.num_vertices(); ++v) {
    vals[v] = tropjac::make_rat(pick(rng, -8, 8), pick(rng, 1, max_den));
    sum += vals[v];
  }
  vals[g.num_vertices() - 1] = tropjac::rat_of(d) - sum;
  return Polarization{d, std::move(vals)};
}

}  // namespace tjtest
