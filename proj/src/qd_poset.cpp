#include "tropjac/qd_poset.hpp"

#include <algorithm>
#include <numeric>

namespace tropjac {

int QDPoset::index_of(const PseudoDivisor& pd) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), pd);
  if (it == elements.end() || !(*it == pd)) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<std::pair<int, int>> QDPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (const Cover& c : covers) pairs.push_back({c.parent, c.child});
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<int> QDPoset::maximal_elements() const {
  std::vector<char> has_parent(elements.size(), 0);
  for (const Cover& c : covers) has_parent[c.child] = 1;
  std::vector<int> out;
  for (size_t i = 0; i < elements.size(); ++i)
    if (!has_parent[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<bool>> QDPoset::order_matrix() const {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> ge(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) ge[i][i] = true;
  // Elements are sorted by rank, so one descending sweep closes the relation.
  auto pairs = cover_pairs();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ranks[a] < ranks[b]; });
  for (int x : order)
    for (auto [p, c] : pairs)
      if (p == x)
        for (int j = 0; j < n; ++j)
          if (ge[c][j]) ge[x][j] = true;
  return ge;
}

QDPoset build_qd_poset(const Graph& g, int v0, const Polarization& mu) {
  QDPoset p;
  p.graph = g;
  p.v0 = v0;
  p.mu = mu;
  p.elements = enumerate_quasistable(g, v0, mu);
  std::sort(p.elements.begin(), p.elements.end());
  for (const auto& pd : p.elements) p.ranks.push_back(static_cast<int>(pd.edges.size()));

  for (int i = 0; i < static_cast<int>(p.elements.size()); ++i) {
    const PseudoDivisor& pd = p.elements[i];
    for (int e : pd.edges) {
      for (int side = 0; side < 2; ++side) {
        PseudoDivisor child = specialize_pseudo_on_fixed_graph(g, pd, e, side);
        int j = p.index_of(child);
        if (j < 0)
          throw InternalConsistencyError(
              "specialization of a quasistable pseudo-divisor left the poset");
        p.covers.push_back({i, j, e, side});
      }
    }
  }
  return p;
}

std::pair<bool, int> verify_ranked(const QDPoset& p) {
  const int b1 = betti(p.graph);
  std::vector<char> has_parent(p.elements.size(), 0);
  for (const auto& c : p.covers) has_parent[c.child] = 1;
  bool ok = true;
  for (size_t i = 0; i < p.elements.size(); ++i) {
    // Covers drop the rank by exactly one, so ranked-ness of length b1 means
    // precisely: the parentless elements sit at rank b1.
    if (!has_parent[i] && p.ranks[i] != b1) ok = false;
    if (p.ranks[i] > b1) ok = false;
  }
  // Maximal elements must be spanning-tree complements.
  for (int i : p.maximal_elements()) {
    std::vector<int> kept;
    std::vector<char> in(p.graph.num_edges(), 0);
    for (int e : p.elements[i].edges) in[e] = 1;
    for (int e = 0; e < p.graph.num_edges(); ++e)
      if (!in[e]) kept.push_back(e);
    if (!is_spanning_tree(p.graph, kept)) ok = false;
  }
  return {ok, b1};
}

bool verify_connected_codim1(const QDPoset& p) {
  auto maximal = p.maximal_elements();
  if (maximal.size() <= 1) return true;
  const int b1 = betti(p.graph);
  auto pairs = p.cover_pairs();

  // Adjacency through a shared codimension-1 face.
  std::vector<int> comp(p.elements.size(), -1);
  std::vector<int> stack = {maximal[0]};
  comp[maximal[0]] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [par, chi] : pairs) {
      if (par != x || p.ranks[chi] != b1 - 1) continue;
      for (auto [par2, chi2] : pairs) {
        if (chi2 != chi) continue;
        if (comp[par2] < 0) {
          comp[par2] = 0;
          stack.push_back(par2);
        }
      }
    }
  }
  for (int m : maximal)
    if (comp[m] < 0) return false;
  return true;
}

PushforwardCertificate poset_pushforward(const Specialization& spec, const QDPoset& source,
                                         const QDPoset& target) {
  if (!(spec.source == source.graph) || !(spec.target == target.graph))
    throw ValidationError("poset pushforward: specialization endpoints do not match the posets");
  if (spec.vertex_map[source.v0] != target.v0)
    throw ValidationError("poset pushforward: target poset is not based at iota(v0)");
  {
    Polarization pushed = pushforward_polarization(spec, source.mu);
    if (pushed.values != target.mu.values)
      throw ValidationError("poset pushforward: target polarization is not iota_*(mu)");
  }

  PushforwardCertificate cert;
  cert.map.resize(source.elements.size());
  for (size_t i = 0; i < source.elements.size(); ++i) {
    PseudoDivisor img = pushforward_pseudo(spec, source.elements[i]);
    int j = target.index_of(img);
    if (j < 0)
      throw InternalConsistencyError("pushforward of a quasistable pseudo-divisor not quasistable");
    cert.map[i] = j;
  }

  auto src_ge = source.order_matrix();
  auto tgt_ge = target.order_matrix();
  const int ns = static_cast<int>(source.elements.size());
  const int nt = static_cast<int>(target.elements.size());

  cert.order_preserving = true;
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y)
      if (src_ge[x][y] && !tgt_ge[cert.map[x]][cert.map[y]]) cert.order_preserving = false;

  // Closed: the image of every down-set of x covers the down-set of f(x).
  cert.closed = true;
  for (int x = 0; x < ns; ++x) {
    std::vector<char> image_down(nt, 0);
    for (int y = 0; y < ns; ++y)
      if (src_ge[x][y]) image_down[cert.map[y]] = 1;
    for (int t = 0; t < nt; ++t)
      if (tgt_ge[cert.map[x]][t] && !image_down[t]) cert.closed = false;
  }

  std::vector<char> hit(nt, 0);
  for (int x = 0; x < ns; ++x) hit[cert.map[x]] = 1;
  cert.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  cert.bijective = cert.surjective && ns == nt;
  cert.order_isomorphism = cert.bijective;
  if (cert.bijective) {
    for (int x = 0; x < ns && cert.order_isomorphism; ++x)
      for (int y = 0; y < ns; ++y)
        if (src_ge[x][y] != static_cast<bool>(tgt_ge[cert.map[x]][cert.map[y]])) {
          cert.order_isomorphism = false;
          break;
        }
  }
  return cert;
}

}  // namespace tropjac
