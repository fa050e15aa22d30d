#pragma once

#include <optional>
#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

class Graph;

// Dense row-major matrices over Z and Q.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Int(0)) {}
  Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  static IntMatrix identity(int n);
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;
};

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> data;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rat(0)) {}
  Rat& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const RatMatrix&) const = default;
};

// Row-style Hermite normal form: h = u * m with u unimodular, h in canonical
// echelon form (positive pivots, entries above a pivot reduced into
// [0, pivot), zero rows last).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hermite_normal_form(const IntMatrix& m);

// Does b lie in the integer column span of m?
bool lattice_contains(const IntMatrix& m, const std::vector<Int>& b);

// Precomputed column-lattice basis of a fixed matrix, for repeated
// membership queries.
class LatticeBasis {
 public:
  explicit LatticeBasis(const IntMatrix& m);
  bool contains(const std::vector<Int>& b) const;

 private:
  int dim_;
  std::vector<std::vector<Int>> gens_;  // echelon generators of the column lattice
  std::vector<int> pivots_;
};

Int determinant(const IntMatrix& m);
Rat rat_determinant(const RatMatrix& m);

// Number of spanning trees via a Laplacian cofactor.
Int matrix_tree_count(const Graph& g);

// Exact solve of a x = b; for underdetermined systems x is one solution and
// `nullspace` a basis of solutions of a x = 0. nullopt when inconsistent.
struct RatSolution {
  std::vector<Rat> x;
  std::vector<std::vector<Rat>> nullspace;
};
std::optional<RatSolution> solve_rational(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace tropjac
