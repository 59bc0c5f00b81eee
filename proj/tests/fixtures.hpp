#pragma once

// In-code copies of the worked examples; the JSON files under fixtures/
// carry the same data for the CLI.

#include <string>
#include <utility>
#include <vector>

#include "flagtutte/matroid.hpp"

namespace fx {

using namespace flagtutte;

inline const std::vector<std::pair<int, int>>& k4_edges() {
  static const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return e;
}

inline Matroid k4() { return matroid_from_graph(4, k4_edges()); }

// Non-Pappus configuration on 9 points, 0-indexed.
inline Matroid non_pappus() {
  const std::vector<Subset> nonbases{
      subset_of({0, 1, 2}), subset_of({3, 4, 5}), subset_of({0, 4, 6}), subset_of({0, 5, 7}),
      subset_of({1, 3, 6}), subset_of({1, 5, 8}), subset_of({2, 3, 7}), subset_of({2, 4, 8})};
  std::vector<Subset> bases;
  for_each_k_subset(9, 3, [&](Subset s) {
    for (Subset nb : nonbases)
      if (nb == s) return;
    bases.push_back(s);
  });
  return Matroid::from_masks(9, bases);
}

inline RatMatrix example_rank3_matrix() {
  const int rows[3][8] = {{1, 0, 1, 0, 1, 1, 0, 1}, {0, 1, 1, 0, 2, 2, 2, 1}, {0, 0, 0, 1, 1, 2, 1, 1}};
  RatMatrix m(3, 8);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  return m;
}

// Rank-2 quotient: all pairs of [8] except {1,5} and {2,4} (0-indexed).
inline Matroid example_rank2_quotient() {
  std::vector<Subset> bases;
  for_each_k_subset(8, 2, [&](Subset s) {
    if (s != subset_of({1, 5}) && s != subset_of({2, 4})) bases.push_back(s);
  });
  return Matroid::from_masks(8, bases);
}

// Constituents of the rank-(1,2) flag matroid on [3]: U_{1,3} and bases {01,02}.
inline Matroid flag_example_m1() { return Matroid::uniform(1, 3); }
inline Matroid flag_example_m2() {
  return Matroid::from_masks(3, {subset_of({0, 1}), subset_of({0, 2})});
}

// Small matroid family used by the exhaustive property checks (n <= 5).
inline std::vector<Matroid> small_family() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) out.push_back(Matroid::uniform(k, n));
  out.push_back(flag_example_m2());
  out.push_back(Matroid::from_masks(4, {subset_of({0, 2}), subset_of({0, 3}), subset_of({1, 2}),
                                        subset_of({1, 3})}));
  out.push_back(matroid_from_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}}));
  out.push_back(matroid_from_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}));
  out.push_back(Matroid::from_masks(5, {subset_of({0, 1}), subset_of({0, 2}), subset_of({1, 2}),
                                        subset_of({0, 3}), subset_of({1, 3}), subset_of({2, 3})}));
  return out;
}

}  // namespace fx

#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/polymatroid.hpp"

namespace fx {

inline RatMatrix rows(std::initializer_list<std::initializer_list<int>> data) {
  const int r = static_cast<int>(data.size());
  const int c = r == 0 ? 0 : static_cast<int>(data.begin()->size());
  RatMatrix m(r, c);
  int i = 0;
  for (const auto& row : data) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Rank-3 polymatroid on [3] spanned by <e1,e2>, <e1,e3>, <e1,e3>.
inline Polymatroid example_polymatroid() {
  return polymatroid_from_subspaces(
      {rows({{1, 0, 0}, {0, 1, 0}}), rows({{1, 0, 0}, {0, 0, 1}}), rows({{1, 0, 0}, {0, 0, 1}})});
}

inline FlagMatroid flag_example() {
  return FlagMatroid::from_constituents({flag_example_m1(), flag_example_m2()});
}

// U_{(2,3);5}: uniform constituents of ranks 2 and 3 on [5].
inline FlagMatroid uniform_flag_23_5() {
  return FlagMatroid::from_constituents({Matroid::uniform(2, 5), Matroid::uniform(3, 5)});
}

}  // namespace fx
