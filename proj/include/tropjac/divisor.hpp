#pragma once

#include <compare>
#include <vector>

#include "tropjac/exact_linalg.hpp"
#include "tropjac/graph.hpp"

namespace tropjac {

// Integer-valued function on the vertices of a fixed graph.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<long long> values) : values_(std::move(values)) {}
  static Divisor zero(int n) { return Divisor(std::vector<long long>(n, 0)); }

  int size() const { return static_cast<int>(values_.size()); }
  long long degree() const;
  long long operator[](int v) const { return values_.at(v); }
  long long& operator[](int v) { return values_.at(v); }
  const std::vector<long long>& values() const { return values_; }

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  bool operator==(const Divisor&) const = default;
  auto operator<=>(const Divisor&) const = default;

 private:
  std::vector<long long> values_;
};

// Pair (E, D): an edge subset and a divisor on the E-subdivision with value
// -1 at every exceptional vertex. `div` is indexed by the canonical
// subdivision numbering (originals, then exceptionals in sorted edge order).
struct PseudoDivisor {
  std::vector<int> edges;
  Divisor div;

  long long degree() const { return div.degree(); }
  bool operator==(const PseudoDivisor&) const = default;
  auto operator<=>(const PseudoDivisor& o) const {
    if (auto c = edges.size() <=> o.edges.size(); c != 0) return c;
    if (auto c = edges <=> o.edges; c != 0) return c;
    return div <=> o.div;
  }
};

void validate_divisor(const Graph& g, const Divisor& d);
void validate_pseudo_divisor(const Graph& g, const PseudoDivisor& pd);
PseudoDivisor make_pseudo_divisor(const Graph& g, std::vector<int> edges, Divisor div);
// Wraps a plain divisor as the pseudo-divisor (empty set, D).
PseudoDivisor as_pseudo_divisor(const Divisor& d);

// Matrix of d*d (orientation independent): diagonal = non-loop valence,
// off-diagonal = -multiplicity.
IntMatrix laplacian(const Graph& g);
bool is_principal(const Graph& g, const Divisor& d);
bool are_equivalent(const Graph& g, const Divisor& a, const Divisor& b);

Divisor pushforward_divisor(const Specialization& s, const Divisor& d);
PseudoDivisor pushforward_pseudo(const Specialization& s, const PseudoDivisor& pd);

// The covering move of the QD poset: contract the exceptional vertex of
// `edge` toward one of its endpoints (side 0 = u, side 1 = v); the -1 is
// absorbed there. For loops the two sides coincide.
PseudoDivisor specialize_pseudo_on_fixed_graph(const Graph& g, const PseudoDivisor& pd, int edge,
                                               int side);

}  // namespace tropjac
