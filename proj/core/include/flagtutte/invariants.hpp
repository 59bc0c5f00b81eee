#pragma once

#include <string>
#include <vector>

#include "flagtutte/bivariate.hpp"
#include "flagtutte/matroid.hpp"
#include "flagtutte/polymatroid.hpp"
#include "flagtutte/polytope.hpp"

namespace flagtutte {

/// Sum over all subsets of (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}.
BivarPoly tutte_rank_nullity(const Matroid& m);
/// Deletion-contraction with the loop and coloop rules, memoised on minors.
BivarPoly tutte_delcon(const Matroid& m);
/// Sum over bases of x^{internal activity} y^{external activity}, natural order.
BivarPoly tutte_activity(const Matroid& m);
Integer tutte_eval(const Matroid& m, const Integer& x, const Integer& y);

/// Q(t, u) = sum c[i][j] binom(u, j) binom(t, i).
struct QPolynomial {
  std::vector<std::vector<Integer>> c;

  Integer eval(long long t, long long u) const;
  /// Q'(x, y) = sum c[i][j] (x-1)^i (y-1)^j.
  BivarPoly qprime() const;
};

/// Fits Q from lattice-point counts of P + u Delta + t Nabla on {0..n-1}^2 and
/// checks the fit on {0..n+1}^2; throws FitMismatch.
QPolynomial q_polynomial(const LatticePolytope& p);
BivarPoly qprime(const LatticePolytope& p);

/// (x+y-1) Q'(x,y) x^r y^{n-r} against x^n y^n T((x+y-1)/y, (x+y-1)/x).
struct IdentityReport {
  Verdict verdict;
  BivarPoly lhs;
  BivarPoly rhs;
};
IdentityReport ttoq_check(const Matroid& m);

/// Q'_P against (x-1) Q'_{P\a} + (y-1) Q'_{P/a} + sum_k Q'_{N_k}, with N_k the
/// slice {x_a = k} of the base polytope taken as a polytope on E - a.
IdentityReport qprime_delcon_check(const Polymatroid& p, int a);

/// (-1)^r T(1 - lambda, 0).
UnivarPoly characteristic_poly(const BivarPoly& t, int r);
/// w_{i-1} w_{i+1} <= w_i^2 on absolute values.
Verdict log_concavity(const std::vector<Integer>& coeffs);

}  // namespace flagtutte
