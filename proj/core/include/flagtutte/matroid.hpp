#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagtutte/linalg.hpp"
#include "flagtutte/numeric.hpp"
#include "flagtutte/subset.hpp"

namespace flagtutte {

/// Linear order on the ground set: order[0] is the smallest element.
class Ordering {
 public:
  explicit Ordering(std::vector<int> order);
  static Ordering natural(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  /// Position of element e in the order.
  int position(int e) const { return position_[e]; }
  Ordering reversed() const;

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

/// Matroid on {0..n-1} stored as its canonically sorted basis list.
/// The rank table over all 2^n subsets is derived at construction.
class Matroid {
 public:
  /// Validates B1/B2 and canonicalises; throws Error on violation.
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);
  static Matroid from_masks(int n, std::vector<Subset> bases);
  static Matroid uniform(int k, int n);
  /// Matroid from a rank table assumed to satisfy R1-R3 (no validation).
  static Matroid from_rank_table(int n, const std::vector<int>& table);

  int size() const { return n_; }
  int rank() const { return k_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const;

  int rank(Subset x) const;
  bool is_independent(Subset x) const { return rank(x) == size_of(x); }
  const std::vector<int>& rank_table() const { return rank_table_; }

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

 private:
  Matroid(int n, int k, std::vector<Subset> bases);
  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> bases_;
  std::vector<int> rank_table_;
};

std::vector<std::vector<int>> bases_as_lists(const Matroid& m);

/// Verdict of a rank-axiom or structural check.
struct Verdict {
  bool ok = true;
  std::string axiom;              // which condition failed, empty when ok
  std::vector<Subset> witness;    // witness sets when relevant
  std::string message;
};

enum class RankMode { Matroid, Polymatroid };

/// Checks R1 (0 <= r(X) <= |X|, or r(empty)=0 in polymatroid mode), R2 and R3
/// over all subsets. Submodularity is checked in its local form
/// r(X+i) + r(X+j) >= r(X+i+j) + r(X), which is equivalent.
Verdict check_rank_axioms(const std::vector<int>& table, int n,
                          RankMode mode = RankMode::Matroid);

/// Deletion and contraction; remaining elements are relabelled 0..n-2 in order.
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid dual(const Matroid& m);

std::vector<Subset> circuits(const Matroid& m);
std::vector<Subset> cocircuits(const Matroid& m);

struct LoopsColoops {
  Subset loops = 0;
  Subset coloops = 0;
};
LoopsColoops loops_coloops(const Matroid& m);

/// Connected components, each as a subset, ordered by smallest element.
std::vector<Subset> connected_components(const Matroid& m);

/// Gale-maximal basis under omega via the greedy algorithm.
Subset gale_max(const Matroid& m, const Ordering& omega);
/// As gale_max, then verifies dominance over every basis; throws NotAMatroid.
Subset gale_max_checked(const Matroid& m, const Ordering& omega);

/// A <=_omega B for equal-size sets.
bool gale_leq(Subset a, Subset b, const Ordering& omega);
/// Unique Gale-maximal member of an arbitrary family of equal-size sets, if any.
std::optional<Subset> gale_maximum(const std::vector<Subset>& family, const Ordering& omega);

/// Rank of A in the union matroid: min over B subset A of |A-B| + sum r_i(B).
int union_rank(const std::vector<Matroid>& ms, Subset a);

/// Partition of the ground set into sets I_i independent in M_i, if one exists.
std::optional<std::vector<Subset>> cover_by_independent(const std::vector<Matroid>& ms);

/// Column matroid of an exact rational matrix.
Matroid matroid_from_matrix(const RatMatrix& rows);
/// Cycle matroid of a multigraph; loops and parallel edges allowed.
Matroid matroid_from_graph(int vertices, const std::vector<std::pair<int, int>>& edges);

}  // namespace flagtutte
