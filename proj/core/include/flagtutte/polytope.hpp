#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "flagtutte/cone.hpp"
#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/matroid.hpp"
#include "flagtutte/numeric.hpp"
#include "flagtutte/polymatroid.hpp"

namespace flagtutte {

/// {x : x(S) <= z(S) for nonempty S, x(E) = z(E)}, z indexed by bitmask.
struct SubmodularDescription {
  int n = 0;
  std::vector<long long> z;
};

class LatticePolytope {
 public:
  /// Convex hull of a point set; vertices are extracted from the homogenised cone.
  static LatticePolytope from_points(std::vector<IntVec> points, int n);
  /// Generalized permutohedron; vertices come from the greedy vertex of every ordering.
  static LatticePolytope from_description(SubmodularDescription desc);
  /// As above with the vertex list supplied by the caller.
  static LatticePolytope from_description(SubmodularDescription desc, std::vector<IntVec> vertices);

  int ambient_dim() const { return n_; }
  /// Lex-sorted.
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::optional<SubmodularDescription>& description() const { return desc_; }
  int dimension() const;
  /// Index into vertices(), or -1.
  int vertex_index(const IntVec& v) const;

  bool contains(const IntVec& x) const { return contains_scaled(x, 1); }
  /// x in kP.
  bool contains_scaled(const IntVec& x, long long k) const;

  LatticePolytope translated(const IntVec& shift) const;
  LatticePolytope scaled(long long k) const;

 private:
  int n_ = 0;
  std::vector<IntVec> vertices_;
  std::optional<SubmodularDescription> desc_;
  // cone over (v, 1) for hull-based membership when no description exists
  std::shared_ptr<const RationalCone> hull_;
};

LatticePolytope base_polytope(const Matroid& m);
LatticePolytope poly_base_polytope(const Polymatroid& p);
/// Minkowski sum of the constituent base polytopes; vertices are the flag vectors.
LatticePolytope flag_polytope(const FlagMatroid& f);

std::vector<IntVec> lattice_points(const LatticePolytope& p);

/// Pairs of vertex indices spanning a 1-dimensional face.
std::vector<std::pair<int, int>> edges(const LatticePolytope& p);
/// Neighbours of one vertex along edges.
std::vector<int> adjacent_vertices(const LatticePolytope& p, int vertex);

/// Every edge parallel to some e_i - e_j; with flag ranks, every vertex is a rank-k vector.
Verdict edge_direction_check(const LatticePolytope& p,
                             const std::optional<std::vector<int>>& flag_ranks = std::nullopt);

/// Cone spanned by u - v over the vertices u; throws NotAVertex.
RationalCone cone_at_vertex(const LatticePolytope& p, const IntVec& v);

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps);
/// Lattice points s_i in P_i with sum p, by backtracking.
std::optional<std::vector<IntVec>> decompose_lattice_point(const IntVec& p,
                                                           const std::vector<LatticePolytope>& ps);

struct NormalityVerdict {
  bool ok = true;
  long long k = 0;   // dilation where the witness was found
  IntVec witness;    // lattice point of kP (after translation) with no decomposition
};
/// Checks k = 2..kmax after translating the first vertex to the origin.
NormalityVerdict is_normal(const LatticePolytope& p, int kmax);

/// Lattice points of P + u*Delta + t*Nabla; needs a submodular description.
Integer count_shifted(const LatticePolytope& p, long long u, long long t);

}  // namespace flagtutte
