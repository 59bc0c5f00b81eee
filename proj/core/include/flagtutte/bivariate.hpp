#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagtutte/numeric.hpp"

namespace flagtutte {

/// Integer polynomial in two variables; terms (i, j) stand for x^i y^j.
class BivarPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Integer>;

  BivarPoly() = default;
  static BivarPoly constant(const Integer& c);
  static BivarPoly x();
  static BivarPoly y();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int i, int j) const;
  void add_term(int i, int j, const Integer& c);
  int degree_x() const;
  int degree_y() const;

  Integer eval(const Integer& x, const Integer& y) const;
  /// Substitutes polynomials for both variables.
  BivarPoly compose(const BivarPoly& px, const BivarPoly& py) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly pow(int e) const;
  bool operator==(const BivarPoly& o) const = default;

  /// "x^3 + 3*x^2 + 4*x*y + 2*y", by total degree then x-degree, descending.
  std::string to_string(const std::string& vx = "x", const std::string& vy = "y") const;

 private:
  Terms terms_;
};

/// Dense univariate integer polynomial, coeffs[i] multiplies v^i; no trailing zeros.
struct UnivarPoly {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Integer eval(const Integer& v) const;
  bool operator==(const UnivarPoly&) const = default;
  std::string to_string(const std::string& var = "lambda") const;
};

}  // namespace flagtutte
