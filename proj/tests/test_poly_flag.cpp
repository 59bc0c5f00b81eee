#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "flagtutte/error.hpp"
#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/polymatroid.hpp"

using namespace flagtutte;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::MalformedInput;
}

Flag flag(std::initializer_list<std::initializer_list<int>> sets) {
  Flag f;
  for (const auto& s : sets) f.sets.push_back(subset_of(std::vector<int>(s)));
  return f;
}

std::vector<Ordering> all_orderings(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Ordering> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("polymatroid construction") {
  auto p = fx::example_polymatroid();
  CHECK(p.rank() == 3);
  CHECK(p.rank(singleton(0)) == 2);
  CHECK(p.rank(singleton(1)) == 2);
  CHECK(p.rank(singleton(2)) == 2);
  CHECK(p.rank(subset_of({0, 1})) == 3);
  CHECK(p.rank(subset_of({1, 2})) == 2);
  CHECK(Polymatroid::from_rank(3, p.table()) == p);
  CHECK(Polymatroid::from_matroid(Matroid::uniform(2, 4)).rank() == 2);
  CHECK(kind_of([] { Polymatroid::from_rank(1, {1, 1}); }) == ErrorKind::AxiomViolation);
  CHECK(kind_of([] { Polymatroid::from_rank(2, {0, 1}); }) == ErrorKind::MalformedInput);

  auto single = polymatroid_from_subspaces({fx::rows({{1, 0}, {0, 1}})});
  CHECK(single.rank(1) == 2);
}

TEST_CASE("polymatroid bases") {
  auto b = poly_bases(fx::example_polymatroid());
  std::vector<IntVec> expect{{1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  CHECK(b == expect);
  CHECK(poly_exchange_holds(b));
  CHECK(poly_bases(Polymatroid::from_matroid(Matroid::uniform(1, 2))) ==
        std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(poly_bases(Polymatroid::from_matroid(Matroid::uniform(0, 3))) ==
        std::vector<IntVec>{{0, 0, 0}});

  for (const auto& m : fx::small_family()) {
    auto pb = poly_bases(Polymatroid::from_matroid(m));
    CHECK(pb.size() == m.bases().size());
    CHECK(poly_exchange_holds(pb));
  }
  CHECK_FALSE(poly_exchange_holds({{1, 1, 0}, {0, 0, 2}}));
}

TEST_CASE("vertex from ordering") {
  auto p = fx::example_polymatroid();
  CHECK(vertex_from_ordering(p, Ordering::natural(3)) == IntVec{2, 1, 0});
  auto bases = poly_bases(p);
  for (const auto& w : all_orderings(3)) {
    auto v = vertex_from_ordering(p, w);
    CHECK(std::find(bases.begin(), bases.end(), v) != bases.end());
  }
  for (const auto& m : fx::small_family())
    for (const auto& w : all_orderings(m.size())) {
      auto v = vertex_from_ordering(Polymatroid::from_matroid(m), w);
      Subset s = 0;
      for (int i = 0; i < m.size(); ++i)
        if (v[i]) s |= singleton(i);
      CHECK(s == gale_max(m, w.reversed()));
    }
  CHECK(vertex_from_ordering(Polymatroid::from_matroid(Matroid::uniform(0, 2)), Ordering::natural(2)) ==
        IntVec{0, 0});
}

TEST_CASE("quotients") {
  auto u13 = Matroid::uniform(1, 3), u23 = Matroid::uniform(2, 3);
  CHECK(is_quotient(u13, u23));
  CHECK_FALSE(is_quotient(u23, u13));
  auto m = matroid_from_matrix(fx::example_rank3_matrix());
  auto n = fx::example_rank2_quotient();
  CHECK(is_quotient(n, m));
  CHECK(is_quotient_exhaustive(n, m));
  auto np = fx::non_pappus();
  CHECK(is_quotient(contract_element(np, 8), delete_element(np, 8)));

  auto fam = fx::small_family();
  for (const auto& a : fam)
    for (const auto& b : fam)
      if (a.size() == b.size()) CHECK(is_quotient(a, b) == is_quotient_exhaustive(a, b));
  CHECK(kind_of([&] { is_quotient(u13, Matroid::uniform(1, 2)); }) ==
        ErrorKind::MismatchedGroundSets);
}

TEST_CASE("flag matroids") {
  auto f = fx::flag_example();
  auto flags = f.flags();
  std::vector<Flag> expect{flag({{0}, {0, 1}}), flag({{0}, {0, 2}}), flag({{1}, {0, 1}}),
                           flag({{2}, {0, 2}})};
  std::sort(expect.begin(), expect.end(), [](const Flag& a, const Flag& b) {
    return std::lexicographical_compare(a.sets.begin(), a.sets.end(), b.sets.begin(),
                                        b.sets.end(), element_lex_less);
  });
  CHECK(flags.size() == 4);
  for (const auto& e : expect) CHECK(f.is_flag(e));
  CHECK_FALSE(f.is_flag(flag({{1}, {1, 2}})));
  CHECK(flag_check_gale(3, f.ranks(), flags).ok);

  auto single = FlagMatroid::from_constituents({Matroid::uniform(2, 4)});
  CHECK(single.flags().size() == 6);
  CHECK(kind_of([] {
          FlagMatroid::from_constituents({Matroid::uniform(2, 3), Matroid::uniform(1, 3)});
        }) == ErrorKind::NotConcordant);
  // same ranks but different matroids cannot be concordant
  CHECK(kind_of([] {
          FlagMatroid::from_constituents(
              {Matroid::uniform(1, 2), Matroid::from_masks(2, {singleton(0)})});
        }) == ErrorKind::NotConcordant);

  auto bad = flag_check_gale(3, {1, 2}, {flag({{0}, {0, 1}}), flag({{1}, {1, 2}})});
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("ordering") != std::string::npos);
  CHECK(flag_check_gale(3, {1, 2}, {flag({{0}, {0, 1}})}).ok);

  CHECK(fx::uniform_flag_23_5().flags().size() == 30);
  CHECK(flag({{0}, {0, 1}}).multiplicity(3) == IntVec{2, 1, 0});
}

TEST_CASE("concordant families pass the Gale test") {
  auto fam = fx::small_family();
  int checked = 0;
  for (const auto& a : fam)
    for (const auto& b : fam) {
      if (a.size() != b.size() || a.rank() > b.rank() || !is_quotient(a, b)) continue;
      auto f = FlagMatroid::from_constituents({a, b});
      CHECK(flag_check_gale(a.size(), f.ranks(), f.flags()).ok);
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("representable constructors") {
  auto f = flag_from_subspace_flag({fx::rows({{1, 1, 1}}), fx::rows({{1, 0, 0}, {0, 1, 1}})});
  CHECK(f.constituents()[0] == fx::flag_example_m1());
  CHECK(f.constituents()[1] == fx::flag_example_m2());
  auto g = flag_from_matrix_prefixes(fx::rows({{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}), {1, 2});
  CHECK(g.constituents()[1] == fx::flag_example_m2());
  CHECK(kind_of([] {
          flag_from_subspace_flag({fx::rows({{0, 0, 1}}), fx::rows({{1, 0, 0}, {0, 1, 1}})});
        }) == ErrorKind::NotNested);

  auto p = polymatroid_of_flag(fx::flag_example());
  auto b = poly_bases(p);
  CHECK(b.size() == 5);
  CHECK(std::find(b.begin(), b.end(), IntVec{1, 1, 1}) != b.end());
  CHECK(polymatroid_of_flag(FlagMatroid::from_constituents({Matroid::uniform(2, 4)})) ==
        Polymatroid::from_matroid(Matroid::uniform(2, 4)));
  auto dbl = polymatroid_of_flag(
      FlagMatroid::from_constituents({Matroid::uniform(1, 2), Matroid::uniform(1, 2)}));
  CHECK(poly_bases(dbl) == std::vector<IntVec>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("flag polymatroid bases are sums of constituent bases") {
  for (const auto& f : {fx::flag_example(), fx::uniform_flag_23_5()}) {
    std::set<IntVec> sums;
    for (const auto& fl : f.flags()) sums.insert(fl.multiplicity(f.size()));
    auto b = poly_bases(polymatroid_of_flag(f));
    // every flag vector is a basis; extra lattice points may appear inside
    for (const auto& v : sums) CHECK(std::find(b.begin(), b.end(), v) != b.end());
  }
}

TEST_CASE("lift to a matroid") {
  auto u12 = Polymatroid::from_matroid(Matroid::uniform(1, 2));
  CHECK(polymatroid_to_matroid(u12, 2) == Matroid::uniform(1, 4));
  for (const auto& m : fx::small_family())
    CHECK(polymatroid_to_matroid(Polymatroid::from_matroid(m), 1) == m);

  auto p = fx::example_polymatroid();
  auto idx = [](int e, int c) { return singleton((e - 1) * 2 + (c - 1)); };
  CHECK(lifted_independent(p, 2, idx(1, 1) | idx(1, 2) | idx(2, 1)));
  CHECK_FALSE(lifted_independent(p, 2, idx(1, 1) | idx(1, 2) | idx(2, 1) | idx(2, 2)));
  CHECK(kind_of([&] { polymatroid_to_matroid(p, 1); }) == ErrorKind::RankBoundTooSmall);
  auto lifted = polymatroid_to_matroid(p, 2);
  CHECK(lifted.rank() == 3);
}
