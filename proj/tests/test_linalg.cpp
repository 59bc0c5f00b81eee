#include <random>

#include "doctest.h"
#include "flagtutte/error.hpp"
#include "flagtutte/linalg.hpp"

using namespace flagtutte;

namespace {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool is_identity(const IntMatrix& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(r, c);
  for (auto& x : m.data) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    IntMatrix a = random_matrix(rng, n, n, 4);
    auto s = smith_normal_form(a);
    CHECK(is_identity(mul(s.u, s.u_inv)));
    const IntMatrix d = mul(mul(s.u, a), s.v);
    CHECK(d.data == s.d.data);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(s.d(i, i) >= 0);
      if (s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
    Integer prod = 1;
    for (int i = 0; i < n; ++i) prod *= s.d(i, i);
    Rational det = determinant(to_rational(a));
    CHECK(Rational(prod) == (det < 0 ? Rational(-det) : det));
  }
  // diag(2, 3) has invariant factors 1, 6
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  auto s = smith_normal_form(a);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 6);
}

TEST_CASE("integer kernel and saturation") {
  // x + 2y + 3z = 0
  IntMatrix a(1, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(0, 2) = 3;
  auto k = integer_kernel(a);
  CHECK(k.cols == 2);
  CHECK(rank(k) == 2);
  const IntMatrix z = mul(a, k);
  for (const auto& x : z.data) CHECK(x == 0);
  // a basis of the kernel lattice: unimodular completion exists iff the
  // 2x2 minors have gcd 1
  Integer g = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Integer m = k(i, 0) * k(j, 1) - k(i, 1) * k(j, 0);
      g = boost::multiprecision::gcd(g, m < 0 ? Integer(-m) : m);
    }
  CHECK(g == 1);

  // span of (2,0),(0,2) saturates to all of Z^2; span of (2,2) to (1,1)
  auto sat = saturation_basis(columns_matrix({{2, 0}, {0, 2}}, 2));
  CHECK(sat.cols == 2);
  CHECK(abs(determinant(to_rational(sat))) == 1);
  auto line = saturation_basis(columns_matrix({{2, 2, 0}}, 3));
  CHECK(line.cols == 1);
  CHECK(abs(line(0, 0)) == 1);
  CHECK(line(0, 0) == line(1, 0));
  CHECK(line(2, 0) == 0);
}

TEST_CASE("rational solves") {
  RatMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = -1;
  auto x = solve(a, {Rational(3), Rational(1)});
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
  auto inv = inverse(a);
  CHECK(inv(0, 0) == Rational(1) / 2);
  CHECK(determinant(a) == -2);
  RatMatrix sing(2, 2);
  CHECK_THROWS_AS(inverse(sing), Error);

  std::vector<Rational> y;
  IntMatrix b = columns_matrix({{1, 1, 0}}, 3);
  CHECK(solve_in_span(b, {3, 3, 0}, y));
  CHECK(y[0] == 3);
  CHECK_FALSE(solve_in_span(b, {3, 2, 0}, y));
}

TEST_CASE("rank accumulator agrees with exact rank") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    RankAccumulator acc(n);
    std::vector<IntVec> vs;
    for (int r = 0; r < n + 2; ++r) {
      IntVec v(n);
      for (auto& x : v) x = bit(rng);
      vs.push_back(v);
      acc.add(v);
      CHECK(acc.rank() == rank(columns_matrix(vs, n)));
    }
  }
}
