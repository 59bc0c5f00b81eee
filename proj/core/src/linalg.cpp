#include "flagtutte/linalg.hpp"

#include <algorithm>
#include <utility>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// col_dst -= q * col_src
void sub_col(IntMatrix& m, int dst, int src, const Integer& q) {
  for (int i = 0; i < m.rows; ++i) m(i, dst) -= q * m(i, src);
}

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void sub_row(IntMatrix& m, int dst, int src, const Integer& q) {
  for (int j = 0; j < m.cols; ++j) m(dst, j) -= q * m(src, j);
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& a, int col_limit) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < col_limit && row < a.rows; ++c) {
    int p = -1;
    for (int i = row; i < a.rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < a.cols; ++j) std::swap(a(row, j), a(p, j));
    Rational inv = 1 / a(row, c);
    for (int j = 0; j < a.cols; ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j < a.cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

IntMatrix columns_matrix(const std::vector<IntVec>& cols, int m) {
  IntMatrix g(m, static_cast<int>(cols.size()));
  for (int j = 0; j < g.cols; ++j)
    for (int i = 0; i < m; ++i) g(i, j) = cols[j][i];
  return g;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) r.data[i] = Rational(a.data[i]);
  return r;
}

int rank(RatMatrix a) { return static_cast<int>(rref(a, a.cols).size()); }

int rank(const IntMatrix& a) { return rank(to_rational(a)); }

int column_rank(const RatMatrix& a, const std::vector<int>& cols) {
  RatMatrix sub(a.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub(i, static_cast<int>(j)) = a(i, cols[j]);
  return rank(std::move(sub));
}

IntMatrix integer_kernel(const IntMatrix& a_in) {
  IntMatrix a = a_in;
  const int n = a.cols;
  IntMatrix q = IntMatrix::identity(n);
  int c = 0;
  for (int i = 0; i < a.rows && c < n; ++i) {
    while (true) {
      // pick the smallest nonzero |a(i, j)|, j >= c, as pivot
      int best = -1;
      for (int j = c; j < n; ++j)
        if (a(i, j) != 0 && (best < 0 || abs_int(a(i, j)) < abs_int(a(i, best)))) best = j;
      if (best < 0) break;
      if (best != c) {
        swap_cols(a, best, c);
        swap_cols(q, best, c);
      }
      bool done = true;
      for (int j = c + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Integer f = a(i, j) / a(i, c);
        sub_col(a, j, c, f);
        sub_col(q, j, c, f);
        if (a(i, j) != 0) done = false;
      }
      if (done) {
        ++c;
        break;
      }
    }
  }
  IntMatrix k(n, n - c);
  for (int i = 0; i < n; ++i)
    for (int j = c; j < n; ++j) k(i, j - c) = q(i, j);
  return k;
}

IntMatrix saturation_basis(const IntMatrix& g) {
  IntMatrix normals = integer_kernel(transpose(g));
  return integer_kernel(transpose(normals));
}

std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  RatMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto piv = rref(aug, a.cols);
  if (static_cast<int>(piv.size()) != a.cols)
    throw Error(ErrorKind::DimensionMismatch, "singular system");
  std::vector<Rational> x(a.cols);
  for (int i = 0; i < a.cols; ++i) x[i] = aug(i, a.cols);
  return x;
}

bool solve_in_span(const IntMatrix& b, const IntVec& v, std::vector<Rational>& y) {
  RatMatrix aug(b.rows, b.cols + 1);
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) aug(i, j) = Rational(b(i, j));
    aug(i, b.cols) = Rational(v[i]);
  }
  auto piv = rref(aug, b.cols);
  for (int i = static_cast<int>(piv.size()); i < b.rows; ++i)
    if (aug(i, b.cols) != 0) return false;
  y.assign(b.cols, Rational(0));
  for (size_t r = 0; r < piv.size(); ++r) y[piv[r]] = aug(static_cast<int>(r), b.cols);
  return true;
}

RatMatrix inverse(const RatMatrix& a) {
  const int n = a.rows;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug, n);
  if (static_cast<int>(piv.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "matrix is singular");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational determinant(RatMatrix a) {
  const int n = a.rows;
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.rows),
              IntMatrix::identity(a.cols)};
  IntMatrix& d = s.d;
  // Row operation helpers keep U_inv consistent: U' = R U, U_inv' = U_inv R^{-1}.
  auto row_swap = [&](int x, int y) {
    swap_rows(d, x, y);
    swap_rows(s.u, x, y);
    swap_cols(s.u_inv, x, y);
  };
  auto row_sub = [&](int dst, int src, const Integer& q) {
    sub_row(d, dst, src, q);
    sub_row(s.u, dst, src, q);
    // inverse of (row_dst -= q row_src) is (row_dst += q row_src); as a right
    // factor this is col_src += q col_dst
    sub_col(s.u_inv, src, dst, Integer(-q));
  };
  auto col_swap = [&](int x, int y) {
    swap_cols(d, x, y);
    swap_cols(s.v, x, y);
  };
  auto col_sub = [&](int dst, int src, const Integer& q) {
    sub_col(d, dst, src, q);
    sub_col(s.v, dst, src, q);
  };

  const int lim = std::min(d.rows, d.cols);
  for (int t = 0; t < lim; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j)
          if (d(i, j) != 0 && (bi < 0 || abs_int(d(i, j)) < abs_int(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return s;
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);
      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        row_sub(i, t, Integer(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        col_sub(j, t, Integer(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < d.rows && bad < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_sub(t, bad, Integer(-1));
    }
    if (d(t, t) < 0) {
      for (int j = 0; j < d.cols; ++j) d(t, j) = -d(t, j);
      for (int j = 0; j < s.u.cols; ++j) s.u(t, j) = -s.u(t, j);
      for (int i = 0; i < s.u_inv.rows; ++i) s.u_inv(i, t) = -s.u_inv(i, t);
    }
  }
  return s;
}

bool RankAccumulator::add(IntVec v) {
  if (static_cast<int>(rows_.size()) == n_) return false;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) continue;
    const long long a = rows_[r][p];
    const long long b = v[p];
    for (int j = 0; j < n_; ++j) {
      long long lhs = 0, rhs = 0, x = 0;
      if (__builtin_mul_overflow(v[j], a, &lhs) ||
          __builtin_mul_overflow(rows_[r][j], b, &rhs) || __builtin_sub_overflow(lhs, rhs, &x))
        throw Error(ErrorKind::TooLarge, "rank accumulator overflow");
      v[j] = x;
    }
    long long g = gcd_of(v);
    if (g > 1)
      for (auto& x : v) x /= g;
  }
  for (int j = 0; j < n_; ++j) {
    if (v[j] != 0) {
      rows_.push_back(std::move(v));
      pivots_.push_back(j);
      return true;
    }
  }
  return false;
}

}  // namespace flagtutte
