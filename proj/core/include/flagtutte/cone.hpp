#pragma once

#include <optional>
#include <vector>

#include "flagtutte/laurent.hpp"
#include "flagtutte/linalg.hpp"
#include "flagtutte/numeric.hpp"

namespace flagtutte {

/// Rational polyhedral cone with apex at the origin, in Z^n.
/// Everything combinatorial happens in coordinates of the saturated lattice
/// span(generators) cap Z^n, where the cone is full-dimensional.
class RationalCone {
 public:
  /// Extreme rays and facets are found by scanning (d-1)-subsets of generators.
  RationalCone(std::vector<IntVec> generators, int ambient_dim);
  /// Caller guarantees that `rays` are exactly the extreme rays (e.g. edge
  /// directions at a polytope vertex); facets are then scanned over rays only.
  static RationalCone from_extreme_rays(std::vector<IntVec> rays, int ambient_dim,
                                        std::vector<IntVec> generators = {});

  int ambient_dim() const { return n_; }
  int dimension() const { return d_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  /// Primitive, lex-sorted.
  const std::vector<IntVec>& extreme_rays() const { return rays_; }
  bool is_pointed() const { return pointed_; }
  /// Columns form a basis of the saturated span lattice.
  const IntMatrix& lattice_basis() const { return basis_; }

  /// Coordinates in the lattice basis; nullopt when x is outside the span.
  std::optional<IntVec> coordinates(const IntVec& x) const;
  IntVec from_coordinates(const IntVec& y) const;
  bool contains(const IntVec& x) const;

  /// Inward facet normals in lattice coordinates.
  const std::vector<IntVec>& facet_normals() const { return facets_; }
  /// The same cone as {x : e.x = 0 for e in equations, h.x >= 0 for h in inequalities}.
  const std::vector<IntVec>& ambient_inequalities() const { return ambient_facets_; }
  const std::vector<IntVec>& ambient_equations() const { return ambient_equations_; }

 private:
  RationalCone() = default;
  void setup_lattice();
  void scan_facets(const std::vector<IntVec>& candidates);
  void setup_ambient_description();

  int n_ = 0;
  int d_ = 0;
  bool pointed_ = true;
  std::vector<IntVec> generators_;
  std::vector<IntVec> rays_;
  IntMatrix basis_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> ambient_facets_;
  std::vector<IntVec> ambient_equations_;
};

/// Simplicial cone on independent primitive generators u_i, where the facet
/// opposite u_i is removed when open[i] is set.
struct HalfOpenSimplicialCone {
  std::vector<IntVec> generators;
  std::vector<bool> open;
  /// Basis of the saturated lattice the cone lives in (columns), shared with its parent.
  IntMatrix lattice;
  /// Filled by prepare(): span equations and positive multiples of the
  /// generator coordinates as integer functionals, for fast membership.
  std::vector<IntVec> equations;
  std::vector<IntVec> coordinate_forms;

  void prepare();

  /// |det| of the generators in lattice coordinates.
  Integer index() const;
  /// Lattice points sum(mu_i u_i) with mu_i in [0,1), or (0,1] for open facets.
  std::vector<IntVec> parallelepiped_points() const;
  bool contains(const IntVec& x) const;
  KRational hilbert_series() const;
};

/// Placing triangulation of the extreme rays (in lex order) made half-open by
/// a fixed generic interior vector, so the pieces partition the lattice points.
std::vector<HalfOpenSimplicialCone> triangulate(const RationalCone& c);

/// Sum over the lattice points of C of t^a, as a reduced rational function.
KRational hilbert_series(const RationalCone& c);

/// Hilb(C) * prod (1 - t^a) over `denom`; throws InexactDivision if not a Laurent polynomial.
LaurentPoly hilbert_numerator(const RationalCone& c, const std::vector<IntVec>& denom);

}  // namespace flagtutte
