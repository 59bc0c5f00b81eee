#include "flagtutte/numeric.hpp"

#include <numeric>
#include <stdexcept>

#include "flagtutte/error.hpp"

namespace flagtutte {

std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in '" + text + "'");
    return Rational(p) / Rational(q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, "not a rational number: '" + text + "'");
  }
}

long long gcd_of(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVec primitive(const IntVec& v) {
  long long g = gcd_of(v);
  if (g <= 1) return v;
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBases: return "EmptyBases";
    case ErrorKind::UnequalCardinality: return "UnequalCardinality";
    case ErrorKind::ExchangeViolation: return "ExchangeViolation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAMatroid: return "NotAMatroid";
    case ErrorKind::MismatchedGroundSets: return "MismatchedGroundSets";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotConcordant: return "NotConcordant";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::RankBoundTooSmall: return "RankBoundTooSmall";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::NegativeShift: return "NegativeShift";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::FitMismatch: return "FitMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace flagtutte
