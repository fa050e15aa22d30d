#pragma once

#include <utility>
#include <vector>

#include "tropjac/quasistability.hpp"

namespace tropjac {

// The poset of quasistable pseudo-divisors under specialization, encoded by
// its covers: single contractions of one exceptional vertex toward one
// endpoint. The full order is reachability over covers.
struct QDPoset {
  Graph graph;
  int v0 = 0;
  Polarization mu;
  std::vector<PseudoDivisor> elements;  // sorted by (|E|, E, divisor)
  struct Cover {
    int parent = 0;
    int child = 0;
    int edge = 0;  // the exceptional edge contracted
    int side = 0;  // 0 = toward u, 1 = toward v
  };
  std::vector<Cover> covers;  // both sides recorded; loops repeat the child
  std::vector<int> ranks;     // |E| per element

  int index_of(const PseudoDivisor& pd) const;  // -1 when absent
  std::vector<std::pair<int, int>> cover_pairs() const;  // deduplicated relation
  std::vector<int> maximal_elements() const;
  // Reachability matrix of the specialization order (x >= y).
  std::vector<std::vector<bool>> order_matrix() const;
};

QDPoset build_qd_poset(const Graph& g, int v0, const Polarization& mu);

// Every maximal chain has length b1; maximal elements are exactly the
// spanning-tree complements.
std::pair<bool, int> verify_ranked(const QDPoset& p);
bool verify_connected_codim1(const QDPoset& p);

struct PushforwardCertificate {
  std::vector<int> map;  // source element -> target element
  bool order_preserving = false;
  bool closed = false;
  bool surjective = false;
  bool bijective = false;
  bool order_isomorphism = false;
};
// Element-wise pushforward between the posets of spec.source and
// spec.target; the target must have been built for (iota(v0), iota_* mu).
PushforwardCertificate poset_pushforward(const Specialization& spec, const QDPoset& source,
                                         const QDPoset& target);

}  // namespace tropjac
