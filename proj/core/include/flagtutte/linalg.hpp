#pragma once

#include <vector>

#include "flagtutte/numeric.hpp"

namespace flagtutte {

/// Dense row-major matrix; rows may be empty for 0 x n shapes, so the
/// column count is carried explicitly.
template <class T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  T& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Builds a matrix whose columns are the given vectors (all of length m).
IntMatrix columns_matrix(const std::vector<IntVec>& cols, int m);

int rank(RatMatrix a);
int rank(const IntMatrix& a);

/// Rank of the column submatrix selected by `cols`.
int column_rank(const RatMatrix& a, const std::vector<int>& cols);

/// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Lattice basis (as columns) of span(G) intersected with Z^m, G given by columns.
IntMatrix saturation_basis(const IntMatrix& g);

/// Exact solution of A x = b for square invertible A.
std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Exact solution of B y = v where B has full column rank and v lies in its
/// column span; returns false when v is outside the span.
bool solve_in_span(const IntMatrix& b, const IntVec& v, std::vector<Rational>& y);

RatMatrix inverse(const RatMatrix& a);
Rational determinant(RatMatrix a);

/// Smith normal form D = U A V of a square integer matrix; also returns U^{-1}.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;
};
SmithForm smith_normal_form(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);

/// Incremental rank of 0/1 (or small integer) vectors in Z^n, using
/// fraction-free elimination with gcd normalisation.
class RankAccumulator {
 public:
  explicit RankAccumulator(int n) : n_(n) {}
  /// Adds v; returns true if it increased the rank.
  bool add(IntVec v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int n_;
  std::vector<IntVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace flagtutte
