#include "doctest.h"
#include "fixtures.hpp"
#include "flagtutte/equivariant.hpp"
#include "flagtutte/error.hpp"
#include "flagtutte/invariants.hpp"
#include "oracles.hpp"

using namespace flagtutte;

namespace {

BivarPoly terms(std::initializer_list<std::tuple<int, int, int>> ts) {
  BivarPoly p;
  for (auto [c, i, j] : ts) p.add_term(i, j, c);
  return p;
}

BivarPoly from_oracle(const std::map<std::pair<int, int>, long long>& t) {
  BivarPoly p;
  for (const auto& [e, c] : t) p.add_term(e.first, e.second, c);
  return p;
}

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("corank-nullity values") {
  const BivarPoly k4 = terms({{1, 3, 0}, {3, 2, 0}, {2, 1, 0}, {4, 1, 1}, {2, 0, 1}, {3, 0, 2}, {1, 0, 3}});
  CHECK(tutte_rank_nullity(fx::k4()) == k4);
  CHECK(tutte_rank_nullity(Matroid::uniform(1, 1)) == BivarPoly::x());
  CHECK(tutte_rank_nullity(Matroid::uniform(0, 1)) == BivarPoly::y());
  // six bases, so no xy term
  CHECK(tutte_rank_nullity(Matroid::uniform(2, 4)) == terms({{1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {1, 0, 2}}));
  CHECK(k4.to_string() == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
}

TEST_CASE("three routes agree") {
  auto family = fx::small_family();
  family.push_back(fx::k4());
  family.push_back(fx::non_pappus());
  family.push_back(fx::example_rank2_quotient());
  for (const auto& m : family) {
    const auto t = tutte_rank_nullity(m);
    CHECK(tutte_delcon(m) == t);
    CHECK(tutte_activity(m) == t);
    CHECK(from_oracle(oracle::tutte(m.bases(), m.size())) == t);
    CHECK(tutte_eval(m, 2, 2) == Integer(1) << m.size());
    CHECK(tutte_eval(m, 1, 1) == Integer(m.bases().size()));
  }
}

TEST_CASE("evaluations") {
  const Matroid k4 = fx::k4();
  CHECK(tutte_eval(k4, 1, 1) == 16);
  CHECK(tutte_eval(Matroid::uniform(2, 4), 1, 1) == 6);
  long long independent = 0;
  for (Subset s = 0; s < (Subset{1} << 6); ++s)
    if (k4.rank(s) == size_of(s)) ++independent;
  CHECK(independent == 38);
  CHECK(tutte_eval(k4, 2, 1) == independent);
  // spanning sets
  long long spanning = 0;
  for (Subset s = 0; s < (Subset{1} << 6); ++s)
    if (k4.rank(s) == 3) ++spanning;
  CHECK(tutte_eval(k4, 1, 2) == spanning);
}

TEST_CASE("q polynomial fit") {
  const auto q11 = q_polynomial(base_polytope(Matroid::uniform(1, 1)));
  CHECK(q11.eval(3, 4) == 1);
  CHECK(q11.qprime() == BivarPoly::constant(1));

  const auto p12 = base_polytope(Matroid::uniform(1, 2));
  const auto q12 = q_polynomial(p12);
  CHECK(q12.eval(0, 0) == 2);
  CHECK(q12.eval(1, 0) == 3);
  CHECK(q12.eval(0, 1) == 3);
  CHECK(q12.qprime() == BivarPoly::x() + BivarPoly::y());
  for (int t = 0; t < 6; ++t)
    for (int u = 0; u < 6; ++u) CHECK(q12.eval(t, u) == count_shifted(p12, u, t));

  // the flag example's polymatroid polytope also fits
  const auto pf = poly_base_polytope(polymatroid_of_flag(fx::flag_example()));
  const auto qf = q_polynomial(pf);
  CHECK(qf.eval(0, 0) == Integer(lattice_points(pf).size()));
}

TEST_CASE("q fit rejects a non-submodular description") {
  // empty at the origin, then a piecewise count once u catches up with z(E)
  SubmodularDescription d{3, {0, 0, 0, 0, 0, 0, 0, 4}};
  const auto bad = LatticePolytope::from_description(d, {});
  try {
    q_polynomial(bad);
    FAIL("expected FitMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FitMismatch);
  }
  CHECK_THROWS_AS(q_polynomial(LatticePolytope::from_points({{0, 0, 0}, {1, 0, -1}}, 3)), Error);
}

TEST_CASE("TtoQ on small matroids") {
  auto family = fx::small_family();
  family.push_back(fx::k4());
  for (const auto& m : family) {
    const auto rep = ttoq_check(m);
    CHECK_MESSAGE(rep.verdict.ok, rep.verdict.message);
  }
}

TEST_CASE("Q' deletion-contraction") {
  const auto u12 = qprime_delcon_check(Polymatroid::from_matroid(Matroid::uniform(1, 2)), 0);
  CHECK(u12.verdict.ok);
  CHECK(u12.lhs == BivarPoly::x() + BivarPoly::y());

  const auto ex = qprime_delcon_check(fx::example_polymatroid(), 2);
  CHECK(ex.lhs == ex.rhs);
  CHECK(ex.verdict.ok);

  const auto zero = qprime_delcon_check(Polymatroid::from_matroid(Matroid::uniform(0, 2)), 1);
  // a single point: u + t + 1 lattice points
  CHECK(zero.lhs == BivarPoly::x() + BivarPoly::y() - BivarPoly::constant(1));
  CHECK(zero.verdict.ok);

  for (const auto& m : fx::small_family()) {
    if (m.size() < 2) continue;
    for (int a = 0; a < m.size(); ++a) {
      const auto rep = qprime_delcon_check(Polymatroid::from_matroid(m), a);
      CHECK_MESSAGE(rep.verdict.ok, rep.verdict.message);
    }
  }
  CHECK_THROWS_AS(qprime_delcon_check(Polymatroid::from_matroid(Matroid::uniform(1, 1)), 0), Error);
}

TEST_CASE("characteristic polynomials of the flag examples") {
  const auto a = characteristic_poly(k_tutte(fx::flag_example()), fx::flag_example().total_rank());
  CHECK(a == UnivarPoly{ints({-1, 2, -1})});
  CHECK(a.to_string() == "-lambda^2 + 2*lambda - 1");
  CHECK(log_concavity(a.coeffs).ok);

  const auto f = fx::uniform_flag_23_5();
  const auto b = characteristic_poly(k_tutte(f, {.threads = 4}), f.total_rank());
  CHECK(b == UnivarPoly{ints({-6, 16, -14, 4})});
  CHECK(b.to_string() == "4*lambda^3 - 14*lambda^2 + 16*lambda - 6");
  CHECK(log_concavity(b.coeffs).ok);
}

TEST_CASE("matroid characteristic polynomial") {
  // U_{2,3}: lambda^2 - 3 lambda + 2
  const auto c = characteristic_poly(tutte_rank_nullity(Matroid::uniform(2, 3)), 2);
  CHECK(c == UnivarPoly{ints({2, -3, 1})});
  // a loop kills it
  CHECK(characteristic_poly(tutte_rank_nullity(Matroid::uniform(0, 1)), 0) == UnivarPoly{ints({0})});
}

TEST_CASE("log concavity") {
  CHECK(log_concavity(ints({1, 2, 1})).ok);
  CHECK(log_concavity(ints({1, -3, 3, -1})).ok);
  const auto v = log_concavity(ints({1, 1, 5}));
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("w0 w2") != std::string::npos);
  CHECK(log_concavity({}).ok);
}
