#include "tropjac/exact_linalg.hpp"

#include <algorithm>

#include "tropjac/divisor.hpp"
#include "tropjac/errors.hpp"
#include "tropjac/graph.hpp"

namespace tropjac {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols != other.rows) throw ValidationError("matrix product dimension mismatch");
  IntMatrix r(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows)};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  int row = 0;
  for (int col = 0; col < h.cols && row < h.rows; ++col) {
    // Gcd out the column below `row` by repeated row combinations.
    while (true) {
      int piv = -1;
      for (int i = row; i < h.rows; ++i)
        if (h.at(i, col) != 0 && (piv < 0 || cmp(abs(h.at(i, col)), abs(h.at(piv, col))) < 0))
          piv = i;
      if (piv < 0) break;
      if (piv != row) {
        for (int j = 0; j < h.cols; ++j) swap(h.at(piv, j), h.at(row, j));
        for (int j = 0; j < u.cols; ++j) swap(u.at(piv, j), u.at(row, j));
      }
      bool done = true;
      for (int i = row + 1; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(row, col);  // truncated division keeps remainders small
        if (q != 0) {
          for (int j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(row, j);
          for (int j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(row, j);
        }
        if (h.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) {
      for (int j = 0; j < h.cols; ++j) h.at(row, j) = -h.at(row, j);
      for (int j = 0; j < u.cols; ++j) u.at(row, j) = -u.at(row, j);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
      if (q != 0) {
        for (int j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(row, j);
        for (int j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(row, j);
      }
    }
    ++row;
  }
  return res;
}

LatticeBasis::LatticeBasis(const IntMatrix& m) : dim_(m.rows) {
  // Row HNF of m^T: its rows generate the column lattice of m.
  IntMatrix r = hermite_normal_form(m.transposed()).h;
  for (int i = 0; i < r.rows; ++i) {
    int p = -1;
    for (int j = 0; j < r.cols; ++j)
      if (r.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) break;  // zero rows are last
    std::vector<Int> gen(r.cols);
    for (int j = 0; j < r.cols; ++j) gen[j] = r.at(i, j);
    gens_.push_back(std::move(gen));
    pivots_.push_back(p);
  }
}

bool LatticeBasis::contains(const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != dim_) throw ValidationError("lattice query dimension mismatch");
  std::vector<Int> r = b;
  for (size_t i = 0; i < gens_.size(); ++i) {
    int p = pivots_[i];
    for (int j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < p; ++j)
      if (r[j] != 0) return false;
    if (r[p] % gens_[i][p] != 0) return false;
    Int c = r[p] / gens_[i][p];
    if (c != 0)
      for (int j = p; j < dim_; ++j) r[j] -= c * gens_[i][j];
  }
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

bool lattice_contains(const IntMatrix& m, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != m.rows) throw ValidationError("lattice query dimension mismatch");
  return LatticeBasis(m).contains(b);
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw ValidationError("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination.
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

Rat rat_determinant(const RatMatrix& m) {
  if (m.rows != m.cols) throw ValidationError("determinant of a non-square matrix");
  // Clear denominators row by row, then reuse the integer path.
  IntMatrix a(m.rows, m.cols);
  Rat scale = 1;
  for (int i = 0; i < m.rows; ++i) {
    std::vector<Rat> row(m.data.begin() + static_cast<size_t>(i) * m.cols,
                         m.data.begin() + static_cast<size_t>(i + 1) * m.cols);
    Int l = lcm_denominators(row);
    scale *= make_rat(1, l);
    for (int j = 0; j < m.cols; ++j) {
      Rat v = m.at(i, j) * Rat(l);
      a.at(i, j) = v.get_num();
    }
  }
  return Rat(determinant(a)) * scale;
}

Int matrix_tree_count(const Graph& g) {
  if (!g.is_connected()) throw ValidationError("matrix-tree count requires a connected graph");
  IntMatrix l = laplacian(g);
  const int n = l.rows;
  if (n == 1) return 1;
  IntMatrix minor(n - 1, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor.at(i - 1, j - 1) = l.at(i, j);
  return determinant(minor);
}

std::optional<RatSolution> solve_rational(const RatMatrix& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw ValidationError("solve dimension mismatch");
  const int m = a.rows, n = a.cols;
  RatMatrix w(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n) = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= n; ++j) swap(w.at(piv, j), w.at(row, j));
    Rat inv = 1 / w.at(row, col);
    for (int j = col; j <= n; ++j) w.at(row, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (int j = col; j <= n; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (w.at(i, n) != 0) return std::nullopt;

  RatSolution sol;
  sol.x.assign(n, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) sol.x[pivot_col[r]] = w.at(static_cast<int>(r), n);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -w.at(static_cast<int>(r), free);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace tropjac
