#include "tropjac/quasistability.hpp"

#include <algorithm>
#include <string>

#include "tropjac/caps.hpp"

namespace tropjac {

Rat beta(const Graph& g, const Polarization& mu, const Divisor& d,
         const std::vector<int>& vertex_subset) {
  validate_polarization(g, mu);
  validate_divisor(g, d);
  auto subset = normalize_subset(vertex_subset, g.num_vertices(), "vertex subset");
  Rat deg = 0;
  for (int v : subset) deg += Rat(static_cast<long>(d[v]));
  return deg - polarization_sum(mu, subset) + Rat(delta(g, subset)) / 2;
}

namespace {

std::vector<int> mask_to_subset(unsigned mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(v);
  return out;
}

// Subset scan engine. beta values are compared as integers scaled by
// Q = 2 * lcm(denominators of mu) when they fit in 64 bits; otherwise the
// comparisons fall back to exact rationals.
class BetaScanner {
 public:
  BetaScanner(const Graph& g, const Polarization& mu) : g_(g), mu_(mu), n_(g.num_vertices()) {
    Caps caps = Caps::effective();
    if (n_ > caps.vertex_scan)
      throw ValidationError("subset scan cap exceeded (|V| = " + std::to_string(n_) + " > " +
                            std::to_string(caps.vertex_scan) + ")");
    validate_polarization(g, mu);
    q_ = 2 * lcm_denominators(mu.values);

    delta_.assign(1u << n_, 0);
    std::vector<int> nonloop_deg(n_, 0);
    std::vector<int> adj(static_cast<size_t>(n_) * n_, 0);
    for (const auto& e : g.edges()) {
      if (e.u == e.v) continue;
      ++nonloop_deg[e.u];
      ++nonloop_deg[e.v];
      ++adj[static_cast<size_t>(e.u) * n_ + e.v];
      ++adj[static_cast<size_t>(e.v) * n_ + e.u];
    }
    for (unsigned mask = 1; mask < (1u << n_); ++mask) {
      int v = __builtin_ctz(mask);
      unsigned rest = mask & (mask - 1);
      int cross = 0;
      for (unsigned r = rest; r; r &= r - 1)
        cross += adj[static_cast<size_t>(v) * n_ + __builtin_ctz(r)];
      delta_[mask] = delta_[rest] + nonloop_deg[v] - 2 * cross;
    }

    mu_abs_bound_ = 0;
    for (const Rat& v : mu.values) {
      Rat scaled = Rat(q_) * v;
      mu_abs_bound_ += abs(scaled.get_num());
    }
    if (fits_ll(q_) && fits_ll((mu_abs_bound_ + q_ * (g.num_edges() + 1)) * 4)) {
      q_ll_ = to_ll(q_);
      mu_q_.assign(1u << n_, 0);
      std::vector<long long> single(n_);
      for (int v = 0; v < n_; ++v) {
        Rat scaled = Rat(q_) * mu.values[v];
        single[v] = to_ll(scaled.get_num());
      }
      for (unsigned mask = 1; mask < (1u << n_); ++mask)
        mu_q_[mask] = mu_q_[mask & (mask - 1)] + single[__builtin_ctz(mask)];
    }
  }

  int n() const { return n_; }
  int delta_of(unsigned mask) const { return delta_[mask]; }

  // Per-divisor table of Q * deg(D|_V); empty when the scaled values might
  // not fit in 64 bits.
  std::vector<long long> scaled_degrees(const Divisor& d) const {
    if (q_ll_ == 0) return {};
    Int dbound = 0;
    for (long long v : d.values()) dbound += abs(int_of(v));
    if (!fits_ll((q_ * dbound + mu_abs_bound_ + q_ * (g_.num_edges() + 1)) * 4)) return {};
    std::vector<long long> deg(1u << n_, 0);
    for (unsigned mask = 1; mask < (1u << n_); ++mask)
      deg[mask] = deg[mask & (mask - 1)] + q_ll_ * d[__builtin_ctz(mask)];
    return deg;
  }

  long long scaled_beta(const std::vector<long long>& deg, unsigned mask) const {
    return deg[mask] - mu_q_[mask] + (q_ll_ / 2) * delta_[mask];
  }

  long long q_ll() const { return q_ll_; }

  Rat exact_beta(const Divisor& d, unsigned mask) const {
    Rat r = 0;
    for (unsigned m = mask; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      r += Rat(static_cast<long>(d[v])) - mu_.values[v];
    }
    return r + Rat(delta_[mask]) / 2;
  }

 private:
  const Graph& g_;
  const Polarization& mu_;
  int n_;
  Int q_;
  Int mu_abs_bound_;
  long long q_ll_ = 0;  // 0 marks the exact-only path
  std::vector<int> delta_;
  std::vector<long long> mu_q_;
};

}  // namespace

StabilityCheck check_stability(const Graph& g, int v0, const Polarization& mu, const Divisor& d) {
  validate_divisor(g, d);
  if (v0 < 0 || v0 >= g.num_vertices()) throw ValidationError("v0 out of range");
  if (d.degree() != mu.degree)
    throw ValidationError("degree mismatch: deg D = " + std::to_string(d.degree()) +
                          ", polarization degree = " + std::to_string(mu.degree));
  BetaScanner scan(g, mu);
  const int n = scan.n();
  const unsigned full = (1u << n) - 1;
  auto deg = scan.scaled_degrees(d);

  StabilityCheck out;
  out.semistable = true;
  out.quasistable = true;
  bool dual_quasistable = true;
  unsigned first_violation = 0;
  bool have_violation = false;

  for (unsigned mask = 0; mask < full; ++mask) {
    bool has_v0 = (mask >> v0) & 1;
    bool below_zero, at_zero, above_cap, at_cap;
    if (!deg.empty()) {
      long long s = scan.scaled_beta(deg, mask);
      long long cap = scan.q_ll() * scan.delta_of(mask);
      below_zero = s < 0;
      at_zero = s == 0;
      above_cap = s > cap;
      at_cap = s == cap;
    } else {
      Rat b = scan.exact_beta(d, mask);
      Rat cap = Rat(scan.delta_of(mask));
      below_zero = b < 0;
      at_zero = b == 0;
      above_cap = b > cap;
      at_cap = b == cap;
    }

    if (below_zero) out.semistable = false;
    if (out.quasistable && (below_zero || (at_zero && has_v0))) {
      out.quasistable = false;
      first_violation = mask;
      have_violation = true;
    }
    if (mask != 0 && (above_cap || (at_cap && !has_v0))) dual_quasistable = false;
  }
  if (dual_quasistable != out.quasistable)
    throw InternalConsistencyError("quasistability characterizations disagree");
  if (have_violation) {
    BetaReport rep;
    rep.subset = mask_to_subset(first_violation, n);
    rep.value = scan.exact_beta(d, first_violation);
    rep.kind = BetaReport::Kind::violating;
    out.violation = rep;
  }
  return out;
}

bool is_semistable(const Graph& g, const Polarization& mu, const Divisor& d) {
  int v0 = g.has_legs() ? g.v0() : 0;
  return check_stability(g, v0, mu, d).semistable;
}

bool is_quasistable(const Graph& g, int v0, const Polarization& mu, const Divisor& d) {
  return check_stability(g, v0, mu, d).quasistable;
}

bool is_quasistable_pseudo(const Graph& g, int v0, const Polarization& mu,
                           const PseudoDivisor& pd) {
  validate_pseudo_divisor(g, pd);
  if (pd.degree() != mu.degree)
    throw ValidationError("degree mismatch between pseudo-divisor and polarization");

  // Route (a): D quasistable on the subdivision w.r.t. mu^E.
  Subdivision sub = subdivide(g, pd.edges);
  Polarization mu_sub = subdivision_polarization(g, mu, pd.edges);
  bool via_subdivision = is_quasistable(sub.graph, v0, mu_sub, pd.div);

  // Route (b): E nondisconnecting and D_E quasistable on Gamma_E w.r.t. mu_E.
  auto [gdel, connected] = delete_edges(g, pd.edges);
  bool via_deletion = false;
  if (connected) {
    Polarization mu_del = deletion_polarization(g, mu, pd.edges);
    std::vector<long long> vals(pd.div.values().begin(),
                                pd.div.values().begin() + g.num_vertices());
    via_deletion = is_quasistable(gdel, v0, mu_del, Divisor(std::move(vals)));
  }

  if (via_subdivision != via_deletion)
    throw InternalConsistencyError("subdivision and deletion quasistability routes disagree");
  return via_subdivision;
}

BetaMinimum beta_minimum(const Graph& g, int v0, const Polarization& mu, const Divisor& d,
                         MinimizerConstraint constraint) {
  validate_divisor(g, d);
  if (v0 < 0 || v0 >= g.num_vertices()) throw ValidationError("v0 out of range");
  BetaScanner scan(g, mu);
  const int n = scan.n();
  const unsigned full = (1u << n) - 1;

  auto admissible = [&](unsigned mask) {
    if (constraint == MinimizerConstraint::AllSubsets) return true;
    return mask != full && ((mask >> v0) & 1) != 0;
  };

  auto deg = scan.scaled_degrees(d);
  std::optional<Rat> best;
  std::optional<long long> best_scaled;
  unsigned inter = full;
  bool found = false;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!admissible(mask)) continue;
    if (!deg.empty()) {
      long long s = scan.scaled_beta(deg, mask);
      if (!best_scaled || s < *best_scaled) {
        best_scaled = s;
        inter = mask;
        found = true;
      } else if (s == *best_scaled) {
        inter &= mask;
      }
    } else {
      Rat b = scan.exact_beta(d, mask);
      if (!best || b < *best) {
        best = b;
        inter = mask;
        found = true;
      } else if (b == *best) {
        inter &= mask;
      }
    }
  }
  if (!found) throw ValidationError("no subset satisfies the minimizer constraint");
  Rat value = scan.exact_beta(d, inter);
  // Submodularity of beta makes the intersection of minimizers a minimizer,
  // so it is the unique inclusion-minimal one. Under the v0 constraint this
  // can fail when the minimum is positive (the union may leave the family).
  bool inter_is_min = !deg.empty() ? scan.scaled_beta(deg, inter) == *best_scaled
                                   : value == *best;
  bool unique_minimal = admissible(inter) && inter_is_min;
  if (!unique_minimal && constraint == MinimizerConstraint::AllSubsets)
    throw InternalConsistencyError("beta minimizers are not closed under intersection");
  return BetaMinimum{value, mask_to_subset(inter, n), unique_minimal};
}

std::vector<int> minimal_beta_minimizer(const Graph& g, int v0, const Polarization& mu,
                                        const Divisor& d, MinimizerConstraint constraint) {
  BetaMinimum m = beta_minimum(g, v0, mu, d, constraint);
  if (!m.unique_minimal)
    throw ValidationError("the constrained beta minimizers have no unique minimal element");
  return m.minimal_subset;
}

namespace {

// Enumerates divisors inside the singleton-constraint box on gdel with the
// given degree, invoking sink in lexicographic order.
template <typename Sink>
void enumerate_box(const Graph& gdel, const Polarization& mu_del, long long target_degree,
                   Sink&& sink) {
  const int n = gdel.num_vertices();
  std::vector<int> nonloop_deg(n, 0);
  for (const auto& e : gdel.edges()) {
    if (e.u == e.v) continue;
    ++nonloop_deg[e.u];
    ++nonloop_deg[e.v];
  }
  std::vector<long long> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    Rat half_delta = Rat(nonloop_deg[v]) / 2;
    lo[v] = to_ll(ceil_rat(mu_del.values[v] - half_delta));
    hi[v] = to_ll(floor_rat(mu_del.values[v] + half_delta));
    if (lo[v] > hi[v]) return;  // empty box
  }
  std::vector<long long> lo_suffix(n + 1, 0), hi_suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) {
    lo_suffix[v] = lo_suffix[v + 1] + lo[v];
    hi_suffix[v] = hi_suffix[v + 1] + hi[v];
  }
  std::vector<long long> vals(n);
  auto rec = [&](auto&& self, int v, long long remaining) -> void {
    if (v == n) {
      if (remaining == 0) sink(vals);
      return;
    }
    for (long long x = lo[v]; x <= hi[v]; ++x) {
      long long rest = remaining - x;
      if (rest < lo_suffix[v + 1] || rest > hi_suffix[v + 1]) continue;
      vals[v] = x;
      self(self, v + 1, rest);
    }
  };
  rec(rec, 0, target_degree);
}

std::vector<std::vector<int>> edge_subsets_by_size(int num_edges, int cap) {
  if (num_edges > cap)
    throw ValidationError("edge enumeration cap exceeded (|E| = " + std::to_string(num_edges) +
                          " > " + std::to_string(cap) + ")");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << num_edges); ++mask) {
    std::vector<int> s;
    for (int e = 0; e < num_edges; ++e)
      if (mask & (1u << e)) s.push_back(e);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return subsets;
}

}  // namespace

std::vector<Divisor> enumerate_quasistable_divisors(const Graph& g, int v0,
                                                    const Polarization& mu) {
  validate_polarization(g, mu);
  std::vector<Divisor> out;
  enumerate_box(g, mu, mu.degree, [&](const std::vector<long long>& vals) {
    Divisor d(vals);
    if (is_quasistable(g, v0, mu, d)) out.push_back(std::move(d));
  });
  return out;
}

std::vector<PseudoDivisor> enumerate_quasistable(const Graph& g, int v0, const Polarization& mu) {
  validate_polarization(g, mu);
  Caps caps = Caps::effective();
  std::vector<PseudoDivisor> out;
  for (const auto& edges : edge_subsets_by_size(g.num_edges(), caps.edge_scan)) {
    auto [gdel, connected] = delete_edges(g, edges);
    if (!connected) continue;
    Polarization mu_del = deletion_polarization(g, mu, edges);
    const int n = g.num_vertices();
    // Deletion equivalence: (E, D) is quasistable iff the restriction D_E
    // is on Gamma_E w.r.t. mu_E, so the search runs on the smaller graph.
    enumerate_box(gdel, mu_del, mu_del.degree, [&](const std::vector<long long>& vals) {
      Divisor d(vals);
      if (!is_quasistable(gdel, v0, mu_del, d)) return;
      std::vector<long long> lifted = vals;
      lifted.resize(n + edges.size(), -1);
      out.push_back(PseudoDivisor{edges, Divisor(std::move(lifted))});
    });
  }
  return out;
}

Divisor tree_like_quasistable(const Graph& g, int v0, const Polarization& mu) {
  validate_polarization(g, mu);
  if (v0 < 0 || v0 >= g.num_vertices()) throw ValidationError("v0 out of range");
  if (!is_tree_like(g)) throw ValidationError("graph is not tree-like");

  const int n = g.num_vertices();
  std::vector<Rat> mu_work = mu.values;
  std::vector<char> edge_alive(g.num_edges(), 1), vertex_alive(n, 1);
  std::vector<int> deg(n, 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) {
      edge_alive[e] = 0;  // loops never constrain beta
      continue;
    }
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }

  struct Peel {
    int leaf;
    int neighbor;
    long long value;
  };
  std::vector<Peel> peels;
  int remaining = n;
  while (remaining > 1) {
    int leaf = -1;
    for (int v = 0; v < n && leaf < 0; ++v)
      if (vertex_alive[v] && v != v0 && deg[v] == 1) leaf = v;
    if (leaf < 0) throw InternalConsistencyError("tree peeling found no leaf");
    int edge = -1;
    for (int e = 0; e < g.num_edges(); ++e)
      if (edge_alive[e] && (g.edge(e).u == leaf || g.edge(e).v == leaf)) {
        edge = e;
        break;
      }
    int u = g.edge(edge).u == leaf ? g.edge(edge).v : g.edge(edge).u;
    // The unique integer in [mu(v) - 1/2, mu(v) + 1/2).
    long long a = to_ll(ceil_rat(mu_work[leaf] - make_rat(1, 2)));
    peels.push_back({leaf, u, a});
    mu_work[u] += mu_work[leaf];
    vertex_alive[leaf] = 0;
    edge_alive[edge] = 0;
    --deg[u];
    --deg[leaf];
    --remaining;
  }
  int root = -1;
  for (int v = 0; v < n; ++v)
    if (vertex_alive[v]) root = v;

  Divisor d = Divisor::zero(n);
  d[root] = mu.degree;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    d[it->leaf] = it->value;
    d[it->neighbor] -= it->value;
  }
  return d;
}

PseudoDivisor spanning_complement_quasistable(const Graph& g, int v0, const Polarization& mu,
                                              const std::vector<int>& edge_subset) {
  auto edges = normalize_subset(edge_subset, g.num_edges(), "edge subset");
  std::vector<int> kept;
  std::vector<char> in(g.num_edges(), 0);
  for (int e : edges) in[e] = 1;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in[e]) kept.push_back(e);
  if (!is_spanning_tree(g, kept))
    throw ValidationError("edge set is not the complement of a spanning tree");

  auto [gdel, connected] = delete_edges(g, edges);
  Polarization mu_del = deletion_polarization(g, mu, edges);
  Divisor d = tree_like_quasistable(gdel, v0, mu_del);
  std::vector<long long> lifted = d.values();
  lifted.resize(g.num_vertices() + edges.size(), -1);
  return PseudoDivisor{std::move(edges), Divisor(std::move(lifted))};
}

}  // namespace tropjac
