#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagtutte/numeric.hpp"

namespace flagtutte {

/// Integer Laurent polynomial in n variables t_0..t_{n-1}.
/// Terms are kept in lex order of exponent vectors; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<IntVec, Integer>;

  explicit LaurentPoly(int nvars = 0) : n_(nvars) {}
  static LaurentPoly constant(int nvars, const Integer& c);
  static LaurentPoly monomial(const IntVec& exp, const Integer& c = 1);
  /// 1 - t^a
  static LaurentPoly one_minus(const IntVec& a);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const IntVec& exp) const;

  void add_term(const IntVec& exp, const Integer& c);
  /// Multiply by t^e.
  LaurentPoly shifted(const IntVec& e) const;
  /// Substitute t_i = 1.
  Integer sum_of_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// Human-readable form such as "t0^2*t1 - t0*t1*t2".
  std::string to_string() const;

 private:
  void check_dims(const LaurentPoly& o) const;
  int n_;
  Terms terms_;
};

/// p / (1 - t^a) when it is a Laurent polynomial.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const IntVec& a);

/// p / q when it is a Laurent polynomial; lex leading-term elimination bounded
/// by the Newton box, so it always terminates.
std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q);
/// As try_divide; throws InexactDivision.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

/// numerator / prod (1 - t^a) over the denominator multiset.
struct KRational {
  LaurentPoly num;
  std::vector<IntVec> den;

  KRational() = default;
  explicit KRational(LaurentPoly p) : num(std::move(p)) {}
  KRational(LaurentPoly p, std::vector<IntVec> d) : num(std::move(p)), den(std::move(d)) {}
  int nvars() const { return num.nvars(); }
};

/// Flips every factor to a canonical direction (first nonzero entry positive),
/// using 1 - t^{-a} = -t^{-a}(1 - t^a), then sorts the factors.
KRational kr_normalize(KRational f);
/// Cancels denominator factors that divide the numerator exactly; sorts the rest.
KRational kr_reduce(KRational f);
/// Sum over the least common multiple of the factor multisets. A factor of b
/// that occurs in a only with the opposite direction is flipped to match.
KRational kr_add(const KRational& a, const KRational& b);
/// Sum of many terms over one common denominator, built once; not reduced.
/// Much cheaper than repeated kr_add when most factors never cancel midway.
KRational kr_sum(const std::vector<KRational>& terms, int nvars);
KRational kr_mul(const KRational& a, const KRational& b);
KRational kr_negate(KRational a);
/// Equality as rational functions.
bool kr_equal(const KRational& a, const KRational& b);
/// f * prod (1 - t^a) over `factors`; throws InexactDivision if not a Laurent polynomial.
LaurentPoly clear_denominator(const KRational& f, const std::vector<IntVec>& factors);
/// The numerator after cancelling every denominator factor; nullopt if some factor remains.
std::optional<LaurentPoly> kr_to_poly(const KRational& f);

/// Value at t = 1 along the curve t_i = z^{w_i}. Throws BadWeights when a
/// denominator factor becomes constant and PoleAtOne when the limit is infinite.
Rational evaluate_at_one(const KRational& f, const IntVec& weights);

}  // namespace flagtutte
