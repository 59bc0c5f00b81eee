#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagtutte/linalg.hpp"
#include "flagtutte/matroid.hpp"
#include "flagtutte/polymatroid.hpp"

namespace flagtutte {

/// Pair X subset Y with r_M(Y) - r_M(X) < r_N(Y) - r_N(X), if any.
std::optional<std::pair<Subset, Subset>> quotient_violation(const Matroid& n, const Matroid& m);
/// Is N a quotient of M.
bool is_quotient(const Matroid& n, const Matroid& m);
/// Same verdict from the exhaustive scan over all nested pairs X subset Y.
bool is_quotient_exhaustive(const Matroid& n, const Matroid& m);

/// Chain of sets, one per constituent (repeated ranks repeat the set).
struct Flag {
  std::vector<Subset> sets;

  /// e_F: entry i counts how many members contain i.
  IntVec multiplicity(int n) const;
  bool operator==(const Flag&) const = default;
  auto operator<=>(const Flag&) const = default;
};

class FlagMatroid {
 public:
  /// Throws NotConcordant for decreasing ranks or a failed quotient pair.
  static FlagMatroid from_constituents(std::vector<Matroid> constituents);

  int size() const { return n_; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<Matroid>& constituents() const { return constituents_; }
  int total_rank() const;

  /// Every chain B_1 subset ... subset B_s of constituent bases, in lex order.
  std::vector<Flag> flags() const;
  bool is_flag(const Flag& f) const;

 private:
  FlagMatroid(int n, std::vector<int> ranks, std::vector<Matroid> constituents)
      : n_(n), ranks_(std::move(ranks)), constituents_(std::move(constituents)) {}
  int n_ = 0;
  std::vector<int> ranks_;
  std::vector<Matroid> constituents_;
};

inline std::vector<Flag> enumerate_flags(const FlagMatroid& f) { return f.flags(); }

/// F <= G under omega: every member dominates in the Gale order.
bool flag_gale_leq(const Flag& f, const Flag& g, const Ordering& omega);

/// Passes iff every one of the n! orderings has a unique Gale-maximal flag.
/// On failure the message names an ordering without one.
Verdict flag_check_gale(int n, const std::vector<int>& ranks, const std::vector<Flag>& flags);

/// Constituents from the row spaces V_1 subset ... subset V_s (one matrix each).
/// Throws NotNested when a space is not contained in the next.
FlagMatroid flag_from_subspace_flag(const std::vector<RatMatrix>& spaces);
/// Row-prefix form: V_i is spanned by the first ranks[i] rows of a.
FlagMatroid flag_from_matrix_prefixes(const RatMatrix& a, const std::vector<int>& ranks);

/// r(A) = sum of constituent ranks.
Polymatroid polymatroid_of_flag(const FlagMatroid& f);

}  // namespace flagtutte
