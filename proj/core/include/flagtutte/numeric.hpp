#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagtutte {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer lattice vector; also used for character exponents t^a.
using IntVec = std::vector<long long>;

inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v);
std::string to_string(const IntVec& v);

/// Parses "p/q" or "p" into an exact rational.
Rational parse_rational(const std::string& text);

long long gcd_of(const IntVec& v);

/// v divided by the gcd of its entries; zero stays zero.
IntVec primitive(const IntVec& v);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
long long dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

}  // namespace flagtutte
