#pragma once

#include <optional>
#include <vector>

#include "tropjac/divisor.hpp"
#include "tropjac/polarization.hpp"

namespace tropjac {

// beta_D(V) = deg(D|_V) - mu(V) + delta_V/2.
Rat beta(const Graph& g, const Polarization& mu, const Divisor& d,
         const std::vector<int>& vertex_subset);

struct BetaReport {
  std::vector<int> subset;
  Rat value;
  enum class Kind { violating, tight, slack } kind = Kind::slack;
};

struct StabilityCheck {
  bool semistable = false;
  bool quasistable = false;
  std::optional<BetaReport> violation;  // witness when not quasistable
};

// Exhaustive subset scan; also re-derives the decision through the dual
// characterization beta_D(V) <= delta_V and asserts agreement.
StabilityCheck check_stability(const Graph& g, int v0, const Polarization& mu, const Divisor& d);
bool is_semistable(const Graph& g, const Polarization& mu, const Divisor& d);
bool is_quasistable(const Graph& g, int v0, const Polarization& mu, const Divisor& d);

// Decides quasistability of (E, D) through both routes of the
// subdivision/deletion equivalence and asserts they agree.
bool is_quasistable_pseudo(const Graph& g, int v0, const Polarization& mu,
                           const PseudoDivisor& pd);

enum class MinimizerConstraint { AllSubsets, ContainingV0Proper };
// The inclusion-minimal beta minimizer; minimizers are closed under
// intersection, which the implementation certifies.
std::vector<int> minimal_beta_minimizer(const Graph& g, int v0, const Polarization& mu,
                                        const Divisor& d, MinimizerConstraint constraint);
// For AllSubsets the minimizers are always closed under intersection and the
// minimal one is unique; under the v0 constraint that holds whenever the
// minimum is <= 0 (in particular in the semistable phase of the reduction),
// and `unique_minimal` reports whether the certificate went through.
struct BetaMinimum {
  Rat value;
  std::vector<int> minimal_subset;
  bool unique_minimal = false;
};
BetaMinimum beta_minimum(const Graph& g, int v0, const Polarization& mu, const Divisor& d,
                         MinimizerConstraint constraint);

// All (v0,mu)-quasistable pseudo-divisors, ordered by (|E|, E, divisor).
std::vector<PseudoDivisor> enumerate_quasistable(const Graph& g, int v0, const Polarization& mu);
// The E = {} slice: quasistable plain divisors.
std::vector<Divisor> enumerate_quasistable_divisors(const Graph& g, int v0,
                                                    const Polarization& mu);

// The unique quasistable divisor on a tree-like graph, by leaf peeling.
Divisor tree_like_quasistable(const Graph& g, int v0, const Polarization& mu);

// For E the complement of a spanning tree: the unique quasistable
// pseudo-divisor supported on E.
PseudoDivisor spanning_complement_quasistable(const Graph& g, int v0, const Polarization& mu,
                                              const std::vector<int>& edge_subset);

}  // namespace tropjac
