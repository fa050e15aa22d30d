#pragma once

#include <vector>

#include "tropjac/graph.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

// Rational vertex weighting of a fixed total degree.
struct Polarization {
  long long degree = 0;
  std::vector<Rat> values;
};

Polarization make_polarization(long long degree, std::vector<Rat> values);
void validate_polarization(const Graph& g, const Polarization& mu);
Rat polarization_sum(const Polarization& mu, const std::vector<int>& vertex_subset);

Polarization pushforward_polarization(const Specialization& s, const Polarization& mu);
// mu_E on Gamma_E, degree d + |E|; E must be nondisconnecting.
Polarization deletion_polarization(const Graph& g, const Polarization& mu,
                                   const std::vector<int>& edge_subset);
// mu^E on Gamma^E: zero at exceptional vertices.
Polarization subdivision_polarization(const Graph& g, const Polarization& mu,
                                      const std::vector<int>& edge_subset);

Polarization canonical_polarization(const Graph& g, long long d);
Polarization v0_concentrated_polarization(const Graph& g, long long d);
// t*a + (1-t)*b, defined when degrees agree; any such blend of the two
// universal families is again universal.
Polarization blend_polarizations(const Rat& t, const Polarization& a, const Polarization& b);
Polarization zero_polarization(const Graph& g);

}  // namespace tropjac
