#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's own algorithms and work directly from definitions.

#include <algorithm>
#include <map>
#include <vector>

#include "flagtutte/matroid.hpp"
#include "flagtutte/subset.hpp"

namespace oracle {

using flagtutte::Subset;

// r(X) = max |X cap B| over bases.
inline int rank(const std::vector<Subset>& bases, Subset x) {
  int best = 0;
  for (Subset b : bases) best = std::max(best, flagtutte::size_of(b & x));
  return best;
}

// Corank-nullity sum with coefficients indexed [i][j] for x^i y^j.
inline std::map<std::pair<int, int>, long long> tutte(const std::vector<Subset>& bases, int n) {
  const int r = rank(bases, flagtutte::full_set(n));
  std::map<std::pair<int, int>, long long> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const int rs = rank(bases, s);
    const int a = r - rs, b = flagtutte::size_of(s) - rs;
    // (x-1)^a (y-1)^b expanded
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        long long c = 1;
        for (int t = 0; t < i; ++t) c = c * (a - t) / (t + 1);
        long long d = 1;
        for (int t = 0; t < j; ++t) d = d * (b - t) / (t + 1);
        const long long sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
        out[{i, j}] += sign * c * d;
      }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Is the family a matroid basis family? Exchange check straight from the axiom.
inline bool exchange_holds(const std::vector<Subset>& bases) {
  auto member = [&](Subset s) { return std::find(bases.begin(), bases.end(), s) != bases.end(); };
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int e : flagtutte::elements(b1 & ~b2)) {
        bool ok = false;
        for (int f : flagtutte::elements(b2 & ~b1))
          ok = ok || member((b1 & ~flagtutte::singleton(e)) | flagtutte::singleton(f));
        if (!ok) return false;
      }
  return true;
}

// Is there a partition of E into sets with parts[i] independent in ms[i]? Exhaustive.
inline bool partition_exists(const std::vector<flagtutte::Matroid>& ms) {
  const int n = ms.front().size();
  const int k = static_cast<int>(ms.size());
  std::vector<int> assign(n, 0);
  while (true) {
    std::vector<Subset> parts(k, 0);
    for (int e = 0; e < n; ++e) parts[assign[e]] |= flagtutte::singleton(e);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = ms[i].is_independent(parts[i]);
    if (ok) return true;
    int pos = 0;
    while (pos < n && ++assign[pos] == k) assign[pos++] = 0;
    if (pos == n) return false;
  }
}

// Largest |union of I_i| with I_i independent in ms[i], restricted to a.
inline int union_rank(const std::vector<flagtutte::Matroid>& ms, Subset a) {
  std::vector<std::vector<Subset>> indep(ms.size());
  for (size_t i = 0; i < ms.size(); ++i)
    flagtutte::for_each_subset(a, [&](Subset s) {
      if (ms[i].is_independent(s)) indep[i].push_back(s);
    });
  int best = 0;
  std::vector<Subset> acc{0};
  for (const auto& list : indep) {
    std::vector<Subset> next;
    for (Subset u : acc)
      for (Subset s : list) next.push_back(u | s);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  for (Subset u : acc) best = std::max(best, flagtutte::size_of(u));
  return best;
}

}  // namespace oracle
