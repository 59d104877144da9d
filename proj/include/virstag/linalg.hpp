#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "virstag/ratfunc.hpp"
#include "virstag/rational.hpp"

namespace virstag {

template <class K>
using Vec = std::vector<K>;

template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// a += f * b
template <class K>
void axpy(Vec<K>& a, const K& f, const Vec<K>& b) {
  if (is_zero(f)) return;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!is_zero(b[i])) add_mul(a[i], f, b[i]);
}

template <class K>
void axpy(Vec<K>& a, const K& f, const SparseVec<K>& b) {
  if (is_zero(f)) return;
  for (const auto& [i, x] : b) add_mul(a[i], f, x);
}

template <class K>
void scale(Vec<K>& a, const K& f) {
  for (auto& x : a)
    if (!is_zero(x)) x *= f;
}

template <class K>
SparseVec<K> to_sparse(const Vec<K>& v) {
  SparseVec<K> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

template <class K>
Vec<K> to_dense(const SparseVec<K>& s, int n) {
  Vec<K> v(n, K(0));
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

template <class K>
K dot(const Vec<K>& a, const Vec<K>& b) {
  K r(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) add_mul(r, a[i], b[i]);
  return r;
}

// Reduced row echelon form maintained incrementally; pivots are chosen
// following a fixed column priority so that normal forms are canonical.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ncols, std::vector<int> col_order) : ncols_(ncols), order_(std::move(col_order)) {
    rank_of_col_.assign(ncols_, 0);
    for (int i = 0; i < ncols_; ++i) rank_of_col_[order_[i]] = i;
    row_of_col_.assign(ncols_, -1);
  }

  int ncols() const { return ncols_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_pivot(int col) const { return row_of_col_[col] >= 0; }

  void reduce(Vec<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& f = v[pivots_[r]];
      if (is_zero(f)) continue;
      K g = -f;
      axpy(v, g, rows_[r]);
    }
  }

  bool contains(Vec<K> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  // Returns true if v enlarged the span.
  bool insert(Vec<K> v) {
    reduce(v);
    int best = -1;
    for (int c = 0; c < ncols_; ++c) {
      int col = order_[c];
      if (!is_zero(v[col])) {
        best = col;
        break;
      }
    }
    if (best < 0) return false;
    K inv = K(1) / v[best];
    scale(v, inv);
    for (auto& row : rows_) {
      if (is_zero(row[best])) continue;
      K g = -row[best];
      axpy(row, g, v);
    }
    row_of_col_[best] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(best);
    return true;
  }

  std::vector<int> non_pivots() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (row_of_col_[c] < 0) out.push_back(c);
    return out;
  }

 private:
  int ncols_ = 0;
  std::vector<int> order_;
  std::vector<int> rank_of_col_;
  std::vector<int> row_of_col_;
  std::vector<Vec<K>> rows_;
  std::vector<int> pivots_;
};

template <class K>
struct Echelon {
  std::vector<Vec<K>> rows;  // rows[0..rank) carry pivots, the rest vanish on pivot columns
  std::vector<int> pivots;
  int rank = 0;
};

// Gauss-Jordan over the first pivot_cols columns; later columns ride along
// (augmented right-hand sides).
template <class K>
Echelon<K> rref(std::vector<Vec<K>> m, int pivot_cols) {
  Echelon<K> e;
  int nrows = static_cast<int>(m.size());
  int r = 0;
  for (int col = 0; col < pivot_cols && r < nrows; ++col) {
    int best = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (int i = r; i < nrows; ++i) {
      if (is_zero(m[i][col])) continue;
      std::size_t cost = pivot_cost(m[i][col]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    std::swap(m[r], m[best]);
    K inv = K(1) / m[r][col];
    scale(m[r], inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || is_zero(m[i][col])) continue;
      K g = -m[i][col];
      axpy(m[i], g, m[r]);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.rank = r;
  e.rows = std::move(m);
  return e;
}

// Basis of {x : A x = 0}; one vector per free column with that entry 1.
template <class K>
std::vector<Vec<K>> nullspace(const std::vector<Vec<K>>& a, int ncols) {
  Echelon<K> e = rref(a, ncols);
  std::vector<int> pivot_row(ncols, -1);
  for (int i = 0; i < e.rank; ++i) pivot_row[e.pivots[i]] = i;
  std::vector<Vec<K>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (pivot_row[f] >= 0) continue;
    Vec<K> x(ncols, K(0));
    x[f] = K(1);
    for (int i = 0; i < e.rank; ++i)
      if (!is_zero(e.rows[i][f])) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class K>
K determinant(std::vector<Vec<K>> m) {
  int n = static_cast<int>(m.size());
  K det(1);
  for (int col = 0; col < n; ++col) {
    int best = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (int i = col; i < n; ++i) {
      if (is_zero(m[i][col])) continue;
      std::size_t cost = pivot_cost(m[i][col]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) return K(0);
    if (best != col) {
      std::swap(m[col], m[best]);
      det = -det;
    }
    det *= m[col][col];
    K inv = K(1) / m[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m[i][col])) continue;
      K g = -m[i][col] * inv;
      axpy(m[i], g, m[col]);
    }
  }
  return det;
}

// Solution set of A x = b written as x = point + span(directions); empty
// optional-like flag when inconsistent.
template <class K>
struct AffineSolution {
  bool consistent = false;
  Vec<K> point;
  std::vector<Vec<K>> directions;
};

template <class K>
AffineSolution<K> solve_affine(const std::vector<Vec<K>>& a, const Vec<K>& b, int ncols) {
  std::vector<Vec<K>> m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vec<K> row = a[i];
    row.resize(ncols);
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  Echelon<K> e = rref(m, ncols);
  AffineSolution<K> s;
  for (std::size_t i = e.rank; i < e.rows.size(); ++i)
    if (!is_zero(e.rows[i][ncols])) return s;
  s.consistent = true;
  s.point.assign(ncols, K(0));
  for (int i = 0; i < e.rank; ++i) s.point[e.pivots[i]] = e.rows[i][ncols];
  std::vector<Vec<K>> pivot_part;
  for (int i = 0; i < e.rank; ++i) pivot_part.push_back(Vec<K>(e.rows[i].begin(), e.rows[i].begin() + ncols));
  s.directions = nullspace(pivot_part, ncols);
  return s;
}

}  // namespace virstag
