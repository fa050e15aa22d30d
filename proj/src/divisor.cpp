#include "tropjac/divisor.hpp"

#include <algorithm>
#include <string>

namespace tropjac {

long long Divisor::degree() const {
  long long d = 0;
  for (long long v : values_) d += v;
  return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
  if (size() != o.size()) throw ValidationError("divisor size mismatch");
  Divisor r = *this;
  for (int i = 0; i < size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  if (size() != o.size()) throw ValidationError("divisor size mismatch");
  Divisor r = *this;
  for (int i = 0; i < size(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

void validate_divisor(const Graph& g, const Divisor& d) {
  if (d.size() != g.num_vertices())
    throw ValidationError("divisor has " + std::to_string(d.size()) + " values for a graph with " +
                          std::to_string(g.num_vertices()) + " vertices");
}

void validate_pseudo_divisor(const Graph& g, const PseudoDivisor& pd) {
  auto edges = normalize_subset(pd.edges, g.num_edges(), "pseudo-divisor edge set");
  if (edges != pd.edges) throw ValidationError("pseudo-divisor edge set must be sorted");
  if (pd.div.size() != g.num_vertices() + static_cast<int>(edges.size()))
    throw ValidationError("pseudo-divisor divisor size does not match the subdivision");
  for (size_t i = 0; i < edges.size(); ++i)
    if (pd.div[g.num_vertices() + static_cast<int>(i)] != -1)
      throw ValidationError("pseudo-divisor must have value -1 at every exceptional vertex");
}

PseudoDivisor make_pseudo_divisor(const Graph& g, std::vector<int> edges, Divisor div) {
  PseudoDivisor pd{std::move(edges), std::move(div)};
  std::sort(pd.edges.begin(), pd.edges.end());
  validate_pseudo_divisor(g, pd);
  return pd;
}

PseudoDivisor as_pseudo_divisor(const Divisor& d) { return PseudoDivisor{{}, d}; }

IntMatrix laplacian(const Graph& g) {
  const int n = g.num_vertices();
  IntMatrix l(n, n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;  // loops cancel in d*d
    l.at(e.u, e.u) += 1;
    l.at(e.v, e.v) += 1;
    l.at(e.u, e.v) -= 1;
    l.at(e.v, e.u) -= 1;
  }
  return l;
}

bool is_principal(const Graph& g, const Divisor& d) {
  validate_divisor(g, d);
  if (d.degree() != 0) return false;
  std::vector<Int> b(d.size());
  for (int i = 0; i < d.size(); ++i) b[i] = int_of(d[i]);
  return lattice_contains(laplacian(g), b);
}

bool are_equivalent(const Graph& g, const Divisor& a, const Divisor& b) {
  return is_principal(g, a - b);
}

Divisor pushforward_divisor(const Specialization& s, const Divisor& d) {
  validate_divisor(s.source, d);
  Divisor out = Divisor::zero(s.target.num_vertices());
  for (int v = 0; v < d.size(); ++v) out[s.vertex_map[v]] += d[v];
  return out;
}

PseudoDivisor pushforward_pseudo(const Specialization& s, const PseudoDivisor& pd) {
  validate_pseudo_divisor(s.source, pd);
  const int n = s.source.num_vertices();
  std::vector<int> target_edges;
  for (int e : pd.edges)
    if (s.edge_map[e] >= 0) target_edges.push_back(s.edge_map[e]);
  std::sort(target_edges.begin(), target_edges.end());

  // Vertex map of the induced specialization of subdivisions: originals
  // follow s, the exceptional vertex over a contracted edge merges into the
  // image of its endpoints.
  Divisor out = Divisor::zero(s.target.num_vertices() + static_cast<int>(target_edges.size()));
  for (int v = 0; v < n; ++v) out[s.vertex_map[v]] += pd.div[v];
  for (size_t i = 0; i < pd.edges.size(); ++i) {
    int e = pd.edges[i];
    int val = static_cast<int>(pd.div[n + static_cast<int>(i)]);
    if (s.edge_map[e] < 0) {
      out[s.vertex_map[s.source.edge(e).u]] += val;
    } else {
      auto it = std::lower_bound(target_edges.begin(), target_edges.end(), s.edge_map[e]);
      int idx = static_cast<int>(it - target_edges.begin());
      out[s.target.num_vertices() + idx] += val;
    }
  }
  return PseudoDivisor{std::move(target_edges), std::move(out)};
}

PseudoDivisor specialize_pseudo_on_fixed_graph(const Graph& g, const PseudoDivisor& pd, int edge,
                                               int side) {
  validate_pseudo_divisor(g, pd);
  if (side != 0 && side != 1) throw ValidationError("endpoint side must be 0 or 1");
  auto it = std::lower_bound(pd.edges.begin(), pd.edges.end(), edge);
  if (it == pd.edges.end() || *it != edge)
    throw ValidationError("edge " + std::to_string(edge) + " is not in the pseudo-divisor's set");
  const int n = g.num_vertices();
  const int pos = static_cast<int>(it - pd.edges.begin());
  int endpoint = side == 0 ? g.edge(edge).u : g.edge(edge).v;

  std::vector<int> edges;
  for (int e : pd.edges)
    if (e != edge) edges.push_back(e);
  Divisor out = Divisor::zero(n + static_cast<int>(edges.size()));
  for (int v = 0; v < n; ++v) out[v] = pd.div[v];
  out[endpoint] += pd.div[n + pos];  // absorb the -1
  int j = 0;
  for (size_t i = 0; i < pd.edges.size(); ++i) {
    if (pd.edges[i] == edge) continue;
    out[n + j] = pd.div[n + static_cast<int>(i)];
    ++j;
  }
  return PseudoDivisor{std::move(edges), std::move(out)};
}

}  // namespace tropjac
