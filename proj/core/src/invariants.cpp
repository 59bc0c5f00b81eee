#include "flagtutte/invariants.hpp"

#include <algorithm>
#include <map>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

BivarPoly shifted_power(int i, int j) {
  // (x-1)^i (y-1)^j
  const BivarPoly xm = BivarPoly::x() - BivarPoly::constant(1);
  const BivarPoly ym = BivarPoly::y() - BivarPoly::constant(1);
  return xm.pow(i) * ym.pow(j);
}

BivarPoly delcon_rec(const Matroid& m, std::map<std::pair<int, std::vector<Subset>>, BivarPoly>& memo) {
  if (m.size() == 0) return BivarPoly::constant(1);
  const auto key = std::make_pair(m.size(), m.bases());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int e = m.size() - 1;
  const auto lc = loops_coloops(m);
  BivarPoly out;
  if (contains(lc.loops, e)) {
    out = BivarPoly::y() * delcon_rec(delete_element(m, e), memo);
  } else if (contains(lc.coloops, e)) {
    out = BivarPoly::x() * delcon_rec(contract_element(m, e), memo);
  } else {
    out = delcon_rec(delete_element(m, e), memo) + delcon_rec(contract_element(m, e), memo);
  }
  memo.emplace(key, out);
  return out;
}

// Points of the slice {x_a = k} of a base polytope, with coordinate a dropped.
std::vector<IntVec> slice_points(const std::vector<IntVec>& points, int a, long long k) {
  std::vector<IntVec> out;
  for (const auto& p : points) {
    if (p[a] != k) continue;
    IntVec q;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (i != a) q.push_back(p[i]);
    out.push_back(std::move(q));
  }
  return out;
}

// The generalized permutohedron spanned by integral points, described by its support values.
LatticePolytope permutohedron_from_points(const std::vector<IntVec>& points, int n) {
  SubmodularDescription d{n, std::vector<long long>(std::size_t{1} << n, 0)};
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    long long best = std::numeric_limits<long long>::min();
    for (const auto& p : points) {
      long long v = 0;
      for (int i : elements(s)) v += p[i];
      best = std::max(best, v);
    }
    d.z[s] = best;
  }
  return LatticePolytope::from_description(std::move(d));
}

}  // namespace

BivarPoly tutte_rank_nullity(const Matroid& m) {
  const int n = m.size();
  const int r = m.rank();
  std::map<std::pair<int, int>, Integer> counts;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const int rs = m.rank(s);
    counts[{r - rs, size_of(s) - rs}] += 1;
  }
  BivarPoly out;
  for (const auto& [e, c] : counts) out += BivarPoly::constant(c) * shifted_power(e.first, e.second);
  return out;
}

BivarPoly tutte_delcon(const Matroid& m) {
  std::map<std::pair<int, std::vector<Subset>>, BivarPoly> memo;
  return delcon_rec(m, memo);
}

BivarPoly tutte_activity(const Matroid& m) {
  const int n = m.size();
  BivarPoly out;
  for (Subset b : m.bases()) {
    int internal = 0, external = 0;
    for (int e = 0; e < n; ++e) {
      // smallest element of the fundamental circuit (e outside b) or cocircuit (e in b)
      bool active = true;
      for (int f = 0; f < e && active; ++f) {
        if (contains(b, e) == contains(b, f)) continue;
        const Subset swapped = b ^ singleton(e) ^ singleton(f);
        if (m.is_basis(swapped)) active = false;
      }
      if (!active) continue;
      if (contains(b, e)) {
        ++internal;
      } else {
        ++external;
      }
    }
    out.add_term(internal, external, 1);
  }
  return out;
}

Integer tutte_eval(const Matroid& m, const Integer& x, const Integer& y) { return tutte_rank_nullity(m).eval(x, y); }

Integer QPolynomial::eval(long long t, long long u) const {
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) s += c[i][j] * binomial(u, static_cast<long long>(j)) * binomial(t, static_cast<long long>(i));
  return s;
}

BivarPoly QPolynomial::qprime() const {
  BivarPoly out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != 0) out += BivarPoly::constant(c[i][j]) * shifted_power(static_cast<int>(i), static_cast<int>(j));
  return out;
}

QPolynomial q_polynomial(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  const int deg = std::max(n - 1, 0);
  // forward differences in t then u give the binomial-basis coefficients
  std::vector<std::vector<Integer>> grid(deg + 1, std::vector<Integer>(deg + 1));
  for (int t = 0; t <= deg; ++t)
    for (int u = 0; u <= deg; ++u) grid[t][u] = count_shifted(p, u, t);
  for (int step = 0; step < deg; ++step)
    for (int t = deg; t > step; --t)
      for (int u = 0; u <= deg; ++u) grid[t][u] -= grid[t - 1][u];
  for (int step = 0; step < deg; ++step)
    for (int t = 0; t <= deg; ++t)
      for (int u = deg; u > step; --u) grid[t][u] -= grid[t][u - 1];
  QPolynomial q{std::move(grid)};
  for (int t = 0; t <= deg + 2; ++t)
    for (int u = 0; u <= deg + 2; ++u) {
      const Integer want = count_shifted(p, u, t);
      if (q.eval(t, u) != want)
        throw Error(ErrorKind::FitMismatch, "fit predicts " + q.eval(t, u).str() + " lattice points at (t,u)=(" +
                                                std::to_string(t) + "," + std::to_string(u) + "), counted " + want.str());
    }
  return q;
}

BivarPoly qprime(const LatticePolytope& p) { return q_polynomial(p).qprime(); }

IdentityReport ttoq_check(const Matroid& m) {
  const int n = m.size();
  const int r = m.rank();
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  const BivarPoly s = x + y - BivarPoly::constant(1);
  IdentityReport rep;
  rep.lhs = s * qprime(base_polytope(m)) * x.pow(r) * y.pow(n - r);
  const BivarPoly t = tutte_rank_nullity(m);
  for (const auto& [e, c] : t.terms()) {
    const auto [i, j] = e;
    // x^n y^n (s/y)^i (s/x)^j
    rep.rhs += BivarPoly::constant(c) * s.pow(i + j) * x.pow(n - j) * y.pow(n - i);
  }
  if (!(rep.lhs == rep.rhs)) {
    rep.verdict.ok = false;
    rep.verdict.axiom = "TtoQ";
    rep.verdict.message = "sides differ: " + rep.lhs.to_string() + " vs " + rep.rhs.to_string();
  }
  return rep;
}

IdentityReport qprime_delcon_check(const Polymatroid& p, int a) {
  const int n = p.size();
  if (a < 0 || a >= n) throw Error(ErrorKind::OutOfRange, "element outside the ground set");
  if (n < 2) throw Error(ErrorKind::MalformedInput, "deletion-contraction check needs at least two elements");
  const BivarPoly one = BivarPoly::constant(1);
  IdentityReport rep;
  const LatticePolytope whole = poly_base_polytope(p);
  rep.lhs = qprime(whole);
  rep.rhs = (BivarPoly::x() - one) * qprime(poly_base_polytope(poly_delete(p, a))) +
            (BivarPoly::y() - one) * qprime(poly_base_polytope(poly_contract(p, a)));
  const auto points = lattice_points(whole);
  for (long long k = 0; k <= p.rank(full_set(n)); ++k) {
    const auto slice = slice_points(points, a, k);
    if (slice.empty()) continue;
    rep.rhs += qprime(permutohedron_from_points(slice, n - 1));
  }
  if (!(rep.lhs == rep.rhs)) {
    rep.verdict.ok = false;
    rep.verdict.axiom = "deletion-contraction";
    rep.verdict.message = "sides differ: " + rep.lhs.to_string() + " vs " + rep.rhs.to_string();
  }
  return rep;
}

UnivarPoly characteristic_poly(const BivarPoly& t, int r) {
  // T(1 - lambda, 0) keeps only the y^0 terms
  std::vector<Integer> coeffs(1, 0);
  for (const auto& [e, c] : t.terms()) {
    if (e.second != 0) continue;
    const int i = e.first;
    if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(i + 1, 0);
    // (1 - lambda)^i
    for (int k = 0; k <= i; ++k) coeffs[k] += c * binomial(i, k) * (k % 2 == 0 ? 1 : -1);
  }
  if (r % 2 != 0)
    for (auto& c : coeffs) c = -c;
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return UnivarPoly{std::move(coeffs)};
}

Verdict log_concavity(const std::vector<Integer>& coeffs) {
  for (std::size_t i = 1; i + 1 < coeffs.size(); ++i) {
    const Integer a = abs(coeffs[i - 1]), b = abs(coeffs[i]), c = abs(coeffs[i + 1]);
    if (a * c > b * b) {
      Verdict v;
      v.ok = false;
      v.axiom = "log-concavity";
      v.message = "w" + std::to_string(i - 1) + " w" + std::to_string(i + 1) + " = " + Integer(a * c).str() +
                  " > w" + std::to_string(i) + "^2 = " + Integer(b * b).str();
      return v;
    }
  }
  return {};
}

}  // namespace flagtutte
