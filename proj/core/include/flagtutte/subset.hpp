#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace flagtutte {

/// Subset of a ground set {0..n-1} as a bitmask (bit i = element i).
using Subset = std::uint32_t;

/// Largest ground set handled by the subset-enumerating code paths.
inline constexpr int kMaxGroundSet = 24;

inline int size_of(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int e) { return (s >> e) & 1U; }
inline Subset full_set(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline Subset singleton(int e) { return Subset{1} << e; }

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= singleton(e);
  return s;
}

/// Lexicographic comparison of the sorted element lists.
inline bool element_lex_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// "{0,2,3}" style rendering.
inline std::string subset_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

/// Calls f(sub) for every subset of s, including the empty set and s itself.
template <class F>
void for_each_subset(Subset s, F&& f) {
  Subset sub = s;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

/// Calls f(mask) for every k-subset of {0..n-1} in increasing mask order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k == 0) {
    f(Subset{0});
    return;
  }
  if (k > n) return;
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << n;
  while (s < limit) {
    f(s);
    Subset c = s & -s;
    Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace flagtutte
