#include "tropjac/polarization.hpp"

#include <string>

namespace tropjac {

Polarization make_polarization(long long degree, std::vector<Rat> values) {
  Rat sum = 0;
  for (const Rat& v : values) sum += v;
  if (sum != Rat(static_cast<long>(degree)))
    throw ValidationError("polarization values sum to " + rat_to_string(sum) +
                          ", expected degree " + std::to_string(degree));
  return Polarization{degree, std::move(values)};
}

void validate_polarization(const Graph& g, const Polarization& mu) {
  if (static_cast<int>(mu.values.size()) != g.num_vertices())
    throw ValidationError("polarization size does not match the graph");
}

Rat polarization_sum(const Polarization& mu, const std::vector<int>& vertex_subset) {
  Rat s = 0;
  for (int v : vertex_subset) s += mu.values.at(v);
  return s;
}

Polarization pushforward_polarization(const Specialization& s, const Polarization& mu) {
  validate_polarization(s.source, mu);
  std::vector<Rat> vals(s.target.num_vertices(), Rat(0));
  for (int v = 0; v < s.source.num_vertices(); ++v) vals[s.vertex_map[v]] += mu.values[v];
  return Polarization{mu.degree, std::move(vals)};
}

Polarization deletion_polarization(const Graph& g, const Polarization& mu,
                                   const std::vector<int>& edge_subset) {
  validate_polarization(g, mu);
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  if (!delete_edges(g, subset).second)
    throw ValidationError("deletion polarization requires a nondisconnecting edge set");
  std::vector<Rat> vals = mu.values;
  for (int e : subset) {
    auto ed = g.edge(e);
    vals[ed.u] += make_rat(1, 2);
    vals[ed.v] += make_rat(1, 2);
  }
  return Polarization{mu.degree + static_cast<long long>(subset.size()), std::move(vals)};
}

Polarization subdivision_polarization(const Graph& g, const Polarization& mu,
                                      const std::vector<int>& edge_subset) {
  validate_polarization(g, mu);
  auto subset = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  std::vector<Rat> vals = mu.values;
  vals.resize(vals.size() + subset.size(), Rat(0));
  return Polarization{mu.degree, std::move(vals)};
}

Polarization canonical_polarization(const Graph& g, long long d) {
  int gg = genus(g);
  if (2 * gg - 2 == 0)
    throw ValidationError("canonical polarization undefined: 2g-2 = 0");
  std::vector<Rat> vals(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    vals[v] = make_rat(Int(static_cast<long>(d)) * (2 * g.weight(v) - 2 + valence(g, v)),
                       Int(2 * gg - 2));
  return make_polarization(d, std::move(vals));
}

Polarization v0_concentrated_polarization(const Graph& g, long long d) {
  std::vector<Rat> vals(g.num_vertices(), Rat(0));
  vals[g.v0()] = Rat(static_cast<long>(d));
  return Polarization{d, std::move(vals)};
}

Polarization blend_polarizations(const Rat& t, const Polarization& a, const Polarization& b) {
  if (a.degree != b.degree) throw ValidationError("cannot blend polarizations of unequal degree");
  if (a.values.size() != b.values.size())
    throw ValidationError("cannot blend polarizations on different graphs");
  std::vector<Rat> vals(a.values.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = t * a.values[i] + (1 - t) * b.values[i];
  return Polarization{a.degree, std::move(vals)};
}

Polarization zero_polarization(const Graph& g) {
  return Polarization{0, std::vector<Rat>(g.num_vertices(), Rat(0))};
}

}  // namespace tropjac
