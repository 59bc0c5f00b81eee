#pragma once

#include <functional>
#include <vector>

#include "flagtutte/linalg.hpp"
#include "flagtutte/matroid.hpp"
#include "flagtutte/numeric.hpp"
#include "flagtutte/subset.hpp"

namespace flagtutte {

/// Integer polymatroid on {0..n-1}, stored as its full rank table indexed by bitmask.
class Polymatroid {
 public:
  /// Validates r(empty)=0, monotonicity and submodularity; throws AxiomViolation.
  static Polymatroid from_rank(int n, std::vector<int> table);
  static Polymatroid from_matroid(const Matroid& m);

  int size() const { return n_; }
  int rank() const { return table_.back(); }
  int rank(Subset x) const { return table_[x]; }
  const std::vector<int>& table() const { return table_; }
  int max_singleton_rank() const;

  bool operator==(const Polymatroid& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  Polymatroid(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}
  int n_ = 0;
  std::vector<int> table_;
};

/// All integer bases: x >= 0, x(U) <= r(U) for every U, x(E) = r(E). Lex order.
std::vector<IntVec> poly_bases(const Polymatroid& p);

/// Exchange property on a family of equal-modulus vectors: for u, v and u_i > v_i
/// there is j with u_j < v_j and u - e_i + e_j in the family.
bool poly_exchange_holds(const std::vector<IntVec>& bases);

/// x_{perm[i]} = r(S_i) - r(S_{i-1}) where S_i holds the first i elements of perm.
IntVec vertex_from_ordering(const Polymatroid& p, const Ordering& perm);

/// r(A) = dim of the sum of the row spaces of blocks[a], a in A.
Polymatroid polymatroid_from_subspaces(const std::vector<RatMatrix>& blocks);

/// Lift to a matroid on E x [r]; element (i, c) has index i*r + c.
/// A is independent iff |A cap (B x [r])| <= r(B) for every B in the projection of A.
bool lifted_independent(const Polymatroid& p, int r, Subset a);
Matroid polymatroid_to_matroid(const Polymatroid& p, int r);

/// Deletion and contraction through the matroid rank formulas; the remaining
/// elements are relabelled 0..n-2.
Polymatroid poly_delete(const Polymatroid& p, int e);
Polymatroid poly_contract(const Polymatroid& p, int e);

}  // namespace flagtutte
