#pragma once

// Brute-force checks for cone Hilbert series: expand the rational function
// along a grading that is positive on the cone and compare coefficients
// with the lattice points of a box, found by direct membership tests.

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "flagtutte/cone.hpp"
#include "flagtutte/laurent.hpp"

namespace oracle {

using flagtutte::IntVec;

struct VecHash {
  size_t operator()(const IntVec& v) const {
    size_t h = 0;
    for (long long x : v) h = h * 1000003u ^ std::hash<long long>()(x);
    return h;
  }
};

using Series = std::unordered_map<IntVec, long long, VecHash>;

// Every lattice point x with |x_i| <= radius, as a callback.
template <class F>
void for_each_box_point(int n, long long radius, F&& f) {
  IntVec x(n, -radius);
  while (true) {
    f(x);
    int i = 0;
    while (i < n && x[i] == radius) x[i++] = -radius;
    if (i == n) return;
    ++x[i];
  }
}

// Lattice points of C with |x_i| <= radius, by a coordinate-wise search that
// drops a prefix once some equation or inequality can no longer be met.
inline std::vector<IntVec> box_points_in_cone(const flagtutte::RationalCone& c, long long radius) {
  const int n = c.ambient_dim();
  struct Row {
    IntVec h;
    bool equation;
    std::vector<long long> slack;  // slack[k] = radius * sum_{i >= k} |h_i|
  };
  std::vector<Row> rows;
  auto add = [&](const IntVec& h, bool eq) {
    Row r{h, eq, std::vector<long long>(n + 1, 0)};
    for (int k = n - 1; k >= 0; --k) r.slack[k] = r.slack[k + 1] + radius * (h[k] < 0 ? -h[k] : h[k]);
    rows.push_back(std::move(r));
  };
  for (const auto& e : c.ambient_equations()) add(e, true);
  for (const auto& h : c.ambient_inequalities()) add(h, false);
  std::vector<IntVec> out;
  IntVec x(n, 0);
  std::vector<long long> partial(rows.size(), 0);
  auto feasible = [&](int k) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (partial[j] + rows[j].slack[k] < 0) return false;
      if (rows[j].equation && partial[j] - rows[j].slack[k] > 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(x);
      return;
    }
    for (long long v = -radius; v <= radius; ++v) {
      x[k] = v;
      for (std::size_t j = 0; j < rows.size(); ++j) partial[j] += rows[j].h[k] * v;
      if (feasible(k + 1)) self(self, k + 1);
      for (std::size_t j = 0; j < rows.size(); ++j) partial[j] -= rows[j].h[k] * v;
    }
    x[k] = 0;
  };
  if (feasible(0)) rec(rec, 0);
  return out;
}

// Integer functional strictly positive on the nonzero points of a pointed cone
// and nonzero on every extra direction: a large multiple of the sum of the
// facet functionals, nudged until it avoids the extra directions.
inline IntVec positive_grading(const flagtutte::RationalCone& c, const std::vector<IntVec>& nonzero) {
  const int n = c.ambient_dim();
  IntVec sum(n, 0);
  for (const auto& h : c.ambient_inequalities()) sum = flagtutte::operator+(sum, h);
  for (long long k = 0; k < 64; ++k) {
    IntVec w(n, 0);
    for (int i = 0; i < n; ++i) w[i] = k == 0 ? 0 : (k * (i + 1) * (i + 3)) % 7 - 3;
    long long big = 1;
    for (const auto& r : c.extreme_rays()) {
      const long long d = flagtutte::dot(w, r);
      big = std::max(big, (d < 0 ? -d : d) + 1);
    }
    IntVec ell(n);
    for (int i = 0; i < n; ++i) ell[i] = big * sum[i] + w[i];
    bool ok = true;
    for (const auto& r : c.extreme_rays()) ok = ok && flagtutte::dot(ell, r) > 0;
    for (const auto& a : nonzero) ok = ok && flagtutte::dot(ell, a) != 0;
    if (ok) return ell;
  }
  return {};
}

// Series expansion of f in the direction where `ell` grows, truncated at degree
// lmax. With a radius, terms that can no longer reach the box |x_i| <= radius are
// dropped: each remaining factor a moves coordinate c by at most a_c / ell(a) per
// unit of degree, and the degree budget left is lmax - ell(y).
inline Series expand(const flagtutte::KRational& f, const IntVec& ell, long long lmax, long long radius = -1) {
  const int n = f.nvars();
  // orient every factor so ell grows along it: 1/(1 - t^a) = -t^{-a} / (1 - t^{-a})
  std::vector<IntVec> steps;
  IntVec shift(n, 0);
  long long sign = 1;
  for (const IntVec& a : f.den) {
    if (flagtutte::dot(ell, a) < 0) {
      steps.push_back(flagtutte::operator-(a));
      shift = flagtutte::operator-(shift, a);
      sign = -sign;
    } else {
      steps.push_back(a);
    }
  }
  const std::size_t m = steps.size();
  // up[j][c], down[j][c]: fastest rise and fall of x_c per degree using steps j..m-1
  std::vector<std::vector<double>> up(m + 1, std::vector<double>(n, 0.0)), down = up;
  for (std::size_t j = m; j-- > 0;) {
    const double deg = static_cast<double>(flagtutte::dot(ell, steps[j]));
    for (int c = 0; c < n; ++c) {
      up[j][c] = std::max(up[j + 1][c], steps[j][c] / deg);
      down[j][c] = std::max(down[j + 1][c], -steps[j][c] / deg);
    }
  }
  auto reachable = [&](const IntVec& y, long long d, std::size_t j) {
    if (radius < 0) return true;
    const double slack = static_cast<double>(lmax - d) + 1e-9;
    for (int c = 0; c < n; ++c) {
      const double r = static_cast<double>(radius) + 1e-9;
      if (y[c] + slack * up[j][c] < -r || y[c] - slack * down[j][c] > r) return false;
    }
    return true;
  };

  std::map<long long, Series> buckets;
  for (const auto& [e0, c] : f.num.terms()) {
    const IntVec e = flagtutte::operator+(e0, shift);
    const long long d = flagtutte::dot(ell, e);
    if (d <= lmax && reachable(e, d, 0)) buckets[d][e] += sign * static_cast<long long>(c);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const IntVec& step = steps[j];
    const long long s = flagtutte::dot(ell, step);
    // geometric series in place: later buckets pick up earlier contributions
    for (auto it = buckets.begin(); it != buckets.end(); ++it) {
      if (it->first + s > lmax) break;
      Series* dst = nullptr;
      for (const auto& [e, c] : it->second) {
        if (c == 0) continue;
        IntVec x = flagtutte::operator+(e, step);
        if (!reachable(x, it->first + s, j)) continue;
        if (!dst) dst = &buckets[it->first + s];
        (*dst)[std::move(x)] += c;
      }
    }
    // keep only what the later factors can still bring back
    for (auto it = buckets.begin(); it != buckets.end();) {
      for (auto t = it->second.begin(); t != it->second.end();) {
        if (t->second == 0 || !reachable(t->first, it->first, j + 1)) {
          t = it->second.erase(t);
        } else {
          ++t;
        }
      }
      it = it->second.empty() ? buckets.erase(it) : std::next(it);
    }
  }
  Series out;
  for (auto& [d, terms] : buckets)
    for (auto& [e, c] : terms)
      if (c != 0) out[e] += c;
  return out;
}

struct SeriesCheck {
  bool ok = true;
  IntVec where;
  long long expected = 0;
  long long got = 0;
};

// Compares the Hilbert series with membership on the box of the given radius.
inline SeriesCheck check_series_on_box(const flagtutte::RationalCone& c, const flagtutte::KRational& f,
                                       long long radius) {
  SeriesCheck res;
  const IntVec ell = positive_grading(c, f.den);
  if (ell.empty()) {
    res.ok = false;
    return res;
  }
  const auto inside = box_points_in_cone(c, radius);
  long long lmax = 0;
  for (const auto& x : inside) lmax = std::max(lmax, flagtutte::dot(ell, x));
  const Series s = expand(f, ell, lmax, radius);
  // every cone point of the box has coefficient 1 ...
  for (const auto& x : inside) {
    const auto it = s.find(x);
    const long long got = it == s.end() ? 0 : it->second;
    if (got != 1) return {false, x, 1, got};
  }
  // ... and nothing else in the box shows up
  for (const auto& [x, coef] : s) {
    if (coef == 0) continue;
    bool in_box = true;
    for (long long v : x) in_box = in_box && v >= -radius && v <= radius;
    if (in_box && !c.contains(x)) return {false, x, 0, coef};
  }
  return res;
}

}  // namespace oracle
