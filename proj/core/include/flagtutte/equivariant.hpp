#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "flagtutte/bivariate.hpp"
#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/laurent.hpp"

namespace flagtutte {

/// Fl(k_1, ..., k_s; n) with 0 < k_1 <= ... <= k_s < n.
class FlagSpace {
 public:
  /// Throws MalformedInput for an empty, unsorted or out-of-range rank tuple.
  FlagSpace(int n, std::vector<int> ranks);

  int n() const { return n_; }
  const std::vector<int>& ranks() const { return ranks_; }
  std::vector<int> distinct_ranks() const;
  /// rank -> number of times it occurs in the tuple
  std::map<int, int> multiplicities() const;
  bool operator==(const FlagSpace&) const = default;

 private:
  int n_;
  std::vector<int> ranks_;
};

/// Torus-fixed points are set-flags, one set per rank entry (a repeated rank
/// repeats the set), so Flag::multiplicity gives the weight e_F.
std::vector<Flag> fixed_points(const FlagSpace& space);
bool is_fixed_point(const FlagSpace& space, const Flag& f);

/// S(F): pairs (i, j) with i in some member and j outside it, sorted.
std::vector<std::pair<int, int>> chart_pairs(int n, const Flag& f);
/// Chart characters e_i - e_j over S(F).
std::vector<IntVec> chart_characters(int n, const Flag& f);

/// A T-invariant curve joining two fixed points that differ by swapping i and j.
struct Orbit {
  Flag from;
  Flag to;
  IntVec character;  // e_i - e_j, with i in some member of `from` that misses j
};
/// Each curve once, with from < to.
std::vector<Orbit> one_dim_orbits(const FlagSpace& space);

/// Localized class: a Laurent polynomial at each fixed point (absent = 0).
class EquivariantClass {
 public:
  explicit EquivariantClass(FlagSpace space) : space_(std::move(space)) {}

  const FlagSpace& space() const { return space_; }
  const std::map<Flag, LaurentPoly>& values() const { return values_; }
  LaurentPoly at(const Flag& f) const;
  /// Throws MalformedInput if f is not a fixed point of the space.
  void set(const Flag& f, LaurentPoly value);
  bool operator==(const EquivariantClass& o) const;

 private:
  FlagSpace space_;
  std::map<Flag, LaurentPoly> values_;
};

/// f(F) = f(F') mod (1 - chi) along every orbit.
Verdict gkm_check(const EquivariantClass& c);

/// y(F): Hilbert-series numerator of the flag polytope's vertex cone at each
/// basis flag, zero elsewhere. The GKM condition is asserted.
EquivariantClass y_class(const FlagMatroid& f, int threads = 1);
/// p_F -> t^{e_F}.
EquivariantClass o1_class(const FlagSpace& space);
/// Pointwise product; throws SpaceMismatch.
EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b);
/// Value at each target flag is the value at its sub-flag of a's ranks.
/// Throws SpaceMismatch unless a's rank tuple is a sub-multiset of the target's.
EquivariantClass pullback(const EquivariantClass& a, const FlagSpace& target);
/// Fl(1, k, n-1; n) for a space Fl(k; n).
FlagSpace incidence_space(const FlagSpace& s);

/// Class on P^{n-1} x P^{n-1}; the fixed point (a, m) is the line <e_a> and
/// the hyperplane spanned by all e_i with i != m.
class ProductClass {
 public:
  explicit ProductClass(int n) : n_(n) {}
  int n() const { return n_; }
  const std::map<std::pair<int, int>, LaurentPoly>& values() const { return values_; }
  LaurentPoly at(int a, int m) const;
  void set(int a, int m, LaurentPoly value);
  bool operator==(const ProductClass&) const = default;

 private:
  int n_;
  std::map<std::pair<int, int>, LaurentPoly> values_;
};

/// Congruences along curves that move one factor only.
Verdict gkm_check(const ProductClass& c);

/// Pushforward from Fl(1, k, n-1; n) along (F_1, F_last); throws SpaceMismatch
/// for other spaces and InexactDivision if a value is not a Laurent polynomial.
ProductClass pushforward_to_PxP(const EquivariantClass& a, int threads = 1);

/// Non-equivariant class sum c[a][b] alpha^a beta^b in Z[alpha,beta]/(alpha^n, beta^n),
/// alpha pulled back from the line factor and beta from the hyperplane factor.
struct BivarClass {
  int n = 0;
  std::vector<std::vector<Integer>> c;

  /// T(x, y) = sum c[a][b] x^b y^a.
  BivarPoly as_tutte() const;
  bool operator==(const BivarClass&) const = default;
};

/// Triangular solve against the coordinate-subspace basis, exact at every
/// step; throws InexactDivision when the class is not a K-theory class.
BivarClass to_nonequivariant(const ProductClass& y);

struct KTutteOptions {
  int threads = 1;
  /// When set, every pushforward value is also evaluated at t = 1 along
  /// t_i = z^{w_i} from its unreduced form and compared.
  std::optional<IntVec> weights;
  /// Nonzero: process fixed points in a shuffled order.
  unsigned order_seed = 0;
};

/// The K-theoretic Tutte polynomial; every rank must lie strictly between 0 and n.
BivarPoly k_tutte(const FlagMatroid& f, const KTutteOptions& options = {});

/// The intermediate classes, for inspection.
struct KTuttePipeline {
  EquivariantClass y;
  EquivariantClass twisted;   // y * O(1)
  EquivariantClass pulled;    // on Fl(1, k, n-1; n)
  ProductClass pushed;
  BivarClass reduced;
  BivarPoly tutte;
};
KTuttePipeline k_tutte_pipeline(const FlagMatroid& f, const KTutteOptions& options = {});

}  // namespace flagtutte
