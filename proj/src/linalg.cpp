#include "rootpoly/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rootpoly {

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

namespace {

// Fraction-free forward elimination; returns the rank. `a` is destroyed.
int bareiss_rank(IntMat& a) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int num = checked_sub(checked_mul(a[r][c], a[i][j]), checked_mul(a[i][c], a[r][j]));
        if (num % prev != 0) throw structural_error("bareiss: non-exact division");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct ColumnReduction {
  IntMat m;                           // reduced copy of the input
  IntMat u;                           // unimodular, input * u == m
  std::vector<std::pair<int, int>> pivots;  // (row, column), in processing order
  int pivot_count = 0;
};

// Unimodular column reduction: zero out, row by row, all entries to the right
// of one pivot column per row. Columns beyond the last pivot end up zero in
// every row, so the corresponding columns of `u` span the saturated kernel.
ColumnReduction column_reduce(const IntMat& input, int n_cols) {
  ColumnReduction cr;
  cr.m = input;
  for (auto& row : cr.m)
    if ((int)row.size() != n_cols) throw std::invalid_argument("column_reduce: ragged matrix");
  cr.u.assign(n_cols, IntVec(n_cols, 0));
  for (int i = 0; i < n_cols; ++i) cr.u[i][i] = 1;

  auto col_combine = [&](int j, int k, Int xj, Int yj, Int xk, Int yk) {
    // col_j' = xj*col_j + yj*col_k;  col_k' = xk*col_j + yk*col_k
    for (auto* mat : {&cr.m, &cr.u}) {
      for (auto& row : *mat) {
        Int cj = row[j], ck = row[k];
        row[j] = checked_add(checked_mul(xj, cj), checked_mul(yj, ck));
        row[k] = checked_add(checked_mul(xk, cj), checked_mul(yk, ck));
      }
    }
  };
  auto col_swap = [&](int j, int k) {
    if (j == k) return;
    for (auto& row : cr.m) std::swap(row[j], row[k]);
    for (auto& row : cr.u) std::swap(row[j], row[k]);
  };

  int c = 0;
  int rows = (int)cr.m.size();
  for (int pr = 0; pr < rows && c < n_cols; ++pr) {
    int jstar = -1;
    for (int j = c; j < n_cols; ++j)
      if (cr.m[pr][j] != 0) {
        jstar = j;
        break;
      }
    if (jstar < 0) continue;
    for (int j = jstar + 1; j < n_cols; ++j) {
      if (cr.m[pr][j] == 0) continue;
      Int a = cr.m[pr][jstar], b = cr.m[pr][j];
      // extended gcd
      Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
      }
      Int g = old_r;
      if (g < 0) {
        g = -g;
        old_s = -old_s;
        old_t = -old_t;
      }
      col_combine(jstar, j, old_s, old_t, -b / g, a / g);
    }
    col_swap(jstar, c);
    cr.pivots.emplace_back(pr, c);
    ++c;
  }
  cr.pivot_count = c;
  return cr;
}

}  // namespace

int rank(IntMat a) { return bareiss_rank(a); }

Int determinant(IntMat a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  if ((int)a[0].size() != n) throw std::invalid_argument("determinant: non-square matrix");
  Int prev = 1;
  Int sign = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(a[c][c], a[i][j]), checked_mul(a[i][c], a[c][j]));
        if (num % prev != 0) throw structural_error("determinant: non-exact division");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<IntVec> kernel_basis(const IntMat& rows, int n_cols) {
  ColumnReduction cr = column_reduce(rows, n_cols);
  std::vector<IntVec> basis;
  for (int j = cr.pivot_count; j < n_cols; ++j) {
    IntVec col(n_cols);
    for (int i = 0; i < n_cols; ++i) col[i] = cr.u[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("solve_integer: size mismatch");
  int n_cols = m.empty() ? 0 : (int)m[0].size();
  ColumnReduction cr = column_reduce(m, n_cols);
  IntVec z(n_cols, 0);
  size_t next_pivot = 0;
  for (int row = 0; row < (int)m.size(); ++row) {
    Int s = 0;
    for (int j = 0; j < n_cols; ++j)
      if (z[j] != 0) s = checked_add(s, checked_mul(cr.m[row][j], z[j]));
    Int resid = checked_sub(rhs[row], s);
    if (next_pivot < cr.pivots.size() && cr.pivots[next_pivot].first == row) {
      int pc = cr.pivots[next_pivot].second;
      ++next_pivot;
      Int piv = cr.m[row][pc];
      if (resid % piv != 0) return std::nullopt;
      z[pc] = resid / piv;
    } else if (resid != 0) {
      return std::nullopt;
    }
  }
  IntVec x(n_cols, 0);
  for (int i = 0; i < n_cols; ++i) {
    Int s = 0;
    for (int j = 0; j < n_cols; ++j)
      if (z[j] != 0) s = checked_add(s, checked_mul(cr.u[i][j], z[j]));
    x[i] = s;
  }
  return x;
}

IntVec hyperplane_normal(const std::vector<IntVec>& points) {
  int d = (int)points.size();
  if (d == 0) throw std::invalid_argument("hyperplane_normal: no points");
  for (const auto& p : points)
    if ((int)p.size() != d) throw std::invalid_argument("hyperplane_normal: need d points in R^d");
  IntMat diffs;
  for (int i = 1; i < d; ++i) {
    IntVec row(d);
    for (int j = 0; j < d; ++j) row[j] = checked_sub(points[i][j], points[0][j]);
    diffs.push_back(std::move(row));
  }
  IntVec normal(d, 0);
  bool nonzero = false;
  for (int j = 0; j < d; ++j) {
    IntMat minor;
    for (const auto& row : diffs) {
      IntVec r;
      r.reserve(d - 1);
      for (int k = 0; k < d; ++k)
        if (k != j) r.push_back(row[k]);
      minor.push_back(std::move(r));
    }
    Int det = determinant(std::move(minor));
    normal[j] = (j % 2 == 0) ? det : -det;
    if (det != 0) nonzero = true;
  }
  if (!nonzero) return {};
  for (const auto& row : diffs)
    if (dot(normal, row) != 0) throw structural_error("hyperplane_normal: not orthogonal");
  return primitive(std::move(normal));
}

}  // namespace rootpoly
