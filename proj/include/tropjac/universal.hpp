#pragma once

#include <string>
#include <vector>

#include "tropjac/qd_poset.hpp"

namespace tropjac {

// Isomorphism classes of stable weighted genus-g graphs with one leg,
// together with the single-edge contraction arrows between classes.
struct StableGraphCatalog {
  int genus = 0;
  std::vector<Graph> classes;  // representatives
  struct Arrow {
    int from = 0;
    int to = 0;
    int edge = 0;          // contracted edge of classes[from]
    Specialization spec;   // classes[from] -> classes[to], exactly
  };
  std::vector<Arrow> arrows;
};

StableGraphCatalog enumerate_stable_graphs(int genus);
// Independent oracle: same labeled generation, pairwise-backtracking dedup.
int count_stable_graphs_oracle(int genus);

enum class PolarizationFamily { Canonical, V0Concentrated };
Polarization universal_polarization(PolarizationFamily family, const Graph& g, long long d);

// The universal poset: orbits of triples (class, pseudo-divisor) under
// Aut(Gamma), ordered by fixed-graph covers and one-edge contraction arrows.
struct UniversalQD {
  int genus = 0;
  long long degree = 0;
  PolarizationFamily family = PolarizationFamily::V0Concentrated;
  StableGraphCatalog catalog;
  struct Element {
    int cls = 0;
    PseudoDivisor pd;  // orbit representative, canonical under Aut
    int dim = 0;       // |E(Gamma)| + |E(pd)|
  };
  std::vector<Element> elements;
  std::vector<std::pair<int, int>> covers;  // (parent, child), dim drop 1

  int index_of(int cls, const PseudoDivisor& pd) const;  // canonicalizes first
};

UniversalQD build_universal_qd(int genus, PolarizationFamily family, long long d);

struct UniversalReport {
  int expected_dimension = 0;
  bool pure_dimension = false;
  bool codim1_connected = false;
  bool forgetful_order_preserving = false;
  std::vector<std::string> violations;

  bool ok() const {
    return pure_dimension && codim1_connected && forgetful_order_preserving;
  }
};
UniversalReport verify_universal_theorems(const UniversalQD& u);

// Orbit representative of (E, D) under Aut(g): lexicographically least image.
PseudoDivisor canonical_pseudo_divisor(const Graph& g, const PseudoDivisor& pd);

}  // namespace tropjac
