#include "tropjac/jacobian.hpp"

#include <algorithm>
#include <string>

namespace tropjac {

namespace {

// BFS spanning tree with edges scanned in id order.
std::vector<int> bfs_tree(const Graph& g, int root) {
  std::vector<int> tree;
  std::vector<char> seen(g.num_vertices(), 0);
  seen[root] = 1;
  std::vector<int> frontier = {root};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int e = 0; e < g.num_edges(); ++e) {
        auto ed = g.edge(e);
        int other = -1;
        if (ed.u == v && !seen[ed.v]) other = ed.v;
        if (ed.v == v && !seen[ed.u]) other = ed.u;
        if (other < 0) continue;
        seen[other] = 1;
        tree.push_back(e);
        next.push_back(other);
      }
    }
    frontier = std::move(next);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Signed edge path root -> v inside the tree, as a coefficient vector.
std::vector<int> tree_path_chain(const Graph& g, const std::vector<int>& tree, int from, int to) {
  std::vector<int> parent(g.num_vertices(), -1), parent_edge(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : tree) {
      auto ed = g.edge(e);
      int other = -1;
      if (ed.u == v && !seen[ed.v]) other = ed.v;
      if (ed.v == v && !seen[ed.u]) other = ed.u;
      if (other < 0) continue;
      seen[other] = 1;
      parent[other] = v;
      parent_edge[other] = e;
      stack.push_back(other);
    }
  }
  std::vector<int> chain(g.num_edges(), 0);
  for (int v = to; v != from; v = parent[v]) {
    if (v < 0) throw InternalConsistencyError("spanning tree does not reach all vertices");
    int e = parent_edge[v];
    chain[e] += (g.edge(e).v == v) ? 1 : -1;  // +1 along the canonical direction
  }
  return chain;
}

}  // namespace

PeriodData make_period_data(const RefinedModel& model, int base_vertex,
                            const std::vector<int>* tree) {
  const Graph& g = model.curve.model();
  PeriodData pd;
  pd.model = model;
  pd.base_vertex = base_vertex;
  pd.tree = tree ? *tree : bfs_tree(g, base_vertex);
  if (!is_spanning_tree(g, pd.tree))
    throw ValidationError("period data requires a spanning tree of the model");

  std::vector<char> in_tree(g.num_edges(), 0);
  for (int e : pd.tree) in_tree[e] = 1;
  for (int f = 0; f < g.num_edges(); ++f) {
    if (in_tree[f]) continue;
    // Fundamental cycle: f plus the tree path from its head back to its tail.
    std::vector<int> cycle = tree_path_chain(g, pd.tree, g.edge(f).v, g.edge(f).u);
    cycle[f] += 1;
    pd.cycles.push_back(std::move(cycle));
  }

  const int gn = static_cast<int>(pd.cycles.size());
  pd.gram.assign(gn, std::vector<Rat>(gn, Rat(0)));
  for (int i = 0; i < gn; ++i)
    for (int j = i; j < gn; ++j) {
      Rat s = 0;
      for (int e = 0; e < g.num_edges(); ++e)
        if (pd.cycles[i][e] != 0 && pd.cycles[j][e] != 0)
          s += model.curve.length(e) * Rat(pd.cycles[i][e] * pd.cycles[j][e]);
      pd.gram[i][j] = s;
      pd.gram[j][i] = s;
    }
  // Positive definiteness via leading principal minors.
  for (int k = 1; k <= gn; ++k) {
    RatMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = pd.gram[i][j];
    if (rat_determinant(minor) <= 0)
      throw InternalConsistencyError("period Gram matrix is not positive definite");
  }

  pd.path_dot.assign(g.num_vertices(), std::vector<Rat>(gn, Rat(0)));
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> chain = tree_path_chain(g, pd.tree, base_vertex, v);
    for (int i = 0; i < gn; ++i) {
      Rat s = 0;
      for (int e = 0; e < g.num_edges(); ++e)
        if (chain[e] != 0 && pd.cycles[i][e] != 0)
          s += model.curve.length(e) * Rat(chain[e] * pd.cycles[i][e]);
      pd.path_dot[v][i] = s;
    }
  }
  return pd;
}

std::vector<Rat> abel_jacobi(const PeriodData& pd, const CurveDivisor& d) {
  const int gn = static_cast<int>(pd.cycles.size());
  std::vector<Rat> t(gn, Rat(0));
  for (const auto& [p, mult] : d.support()) {
    CurvePoint r = pd.model.to_refined(p);
    if (r.is_vertex()) {
      for (int i = 0; i < gn; ++i)
        t[i] += Rat(static_cast<long>(mult)) * pd.path_dot[r.vertex][i];
    } else {
      int u = pd.model.curve.model().edge(r.edge).u;
      for (int i = 0; i < gn; ++i) {
        // Tree path to the edge's tail plus the partial segment: integrating
        // over the first `offset` of edge e contributes offset * cycle(e).
        Rat val = pd.path_dot[u][i] + r.offset * Rat(pd.cycles[i][r.edge]);
        t[i] += Rat(static_cast<long>(mult)) * val;
      }
    }
  }
  return t;
}

bool jacobian_equivalent(const PeriodData& pd, const CurveDivisor& a, const CurveDivisor& b) {
  if (a.degree() != b.degree())
    throw ValidationError("jacobian equivalence requires equal degrees");
  const int gn = static_cast<int>(pd.cycles.size());
  if (gn == 0) return true;
  std::vector<Rat> ta = abel_jacobi(pd, a), tb = abel_jacobi(pd, b);
  RatMatrix gm(gn, gn);
  for (int i = 0; i < gn; ++i)
    for (int j = 0; j < gn; ++j) gm.at(i, j) = pd.gram[i][j];
  std::vector<Rat> rhs(gn);
  for (int i = 0; i < gn; ++i) rhs[i] = ta[i] - tb[i];
  auto sol = solve_rational(gm, rhs);
  if (!sol) throw InternalConsistencyError("positive definite Gram matrix failed to solve");
  for (const Rat& x : sol->x)
    if (x.get_den() != 1) return false;
  return true;
}

JacobianComplex build_jacobian_complex(const TropicalCurve& x, const CurvePoint& p0,
                                       const CurvePolarization& mu) {
  JacobianComplex c;
  c.curve = x;
  c.p0 = p0;
  c.model = relevant_model(x, p0, mu);
  auto v0 = c.model.vertex_of(p0);
  if (!v0) throw InternalConsistencyError("base point missing from the relevant model");
  c.poset = build_qd_poset(c.model.curve.model(), *v0, polarization_on_model(c.model, mu));

  for (int i = 0; i < static_cast<int>(c.poset.elements.size()); ++i) {
    JacobianCell cell;
    cell.element = i;
    cell.edges = c.poset.elements[i].edges;
    for (int e : cell.edges) cell.side_lengths.push_back(c.model.curve.length(e));
    c.cells.push_back(std::move(cell));
  }
  for (const auto& cov : c.poset.covers)
    c.faces.push_back({cov.parent, cov.child, cov.edge, cov.side});
  return c;
}

std::vector<long long> f_vector(const JacobianComplex& c) {
  int maxdim = 0;
  for (const auto& cell : c.cells) maxdim = std::max(maxdim, static_cast<int>(cell.edges.size()));
  std::vector<long long> f(maxdim + 1, 0);
  for (const auto& cell : c.cells) ++f[cell.edges.size()];
  return f;
}

long long euler_characteristic(const JacobianComplex& c) {
  auto f = f_vector(c);
  long long chi = 0;
  for (size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0) ? f[i] : -f[i];
  return chi;
}

CurveDivisor cell_point_divisor(const JacobianComplex& c, int cell,
                                const std::vector<Rat>& offsets) {
  const JacobianCell& jc = c.cells.at(cell);
  if (offsets.size() != jc.edges.size())
    throw ValidationError("cell point needs one offset per cell edge");
  const PseudoDivisor& pd = c.poset.elements[jc.element];
  const Graph& g = c.model.curve.model();
  CurveDivisor d;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (pd.div[v] != 0) d.add(c.model.to_base(CurvePoint::at_vertex(v)), pd.div[v]);
  for (size_t k = 0; k < jc.edges.size(); ++k) {
    int e = jc.edges[k];
    if (offsets[k] <= 0 || offsets[k] >= c.model.curve.length(e))
      throw ValidationError("cell point offsets must be interior");
    d.add(c.model.to_base(CurvePoint::on_edge(e, offsets[k])), -1);
  }
  return d;
}

}  // namespace tropjac
