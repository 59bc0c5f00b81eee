#include "flagtutte/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "flagtutte/error.hpp"
#include "flagtutte/linalg.hpp"
#include "flagtutte/polytope.hpp"
#include "parallel.hpp"

namespace flagtutte {

namespace {

IntVec unit(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

// e_j - e_i: the factor (1 - chi^{-1}) of the chart character chi = e_i - e_j
IntVec inverse_character(int n, int i, int j) {
  IntVec e(n, 0);
  e[j] += 1;
  e[i] -= 1;
  return e;
}

Subset swap_elements(Subset s, int i, int j) {
  const bool hi = contains(s, i), hj = contains(s, j);
  if (hi == hj) return s;
  return s ^ singleton(i) ^ singleton(j);
}

std::vector<std::size_t> processing_order(std::size_t count, unsigned seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) std::shuffle(order.begin(), order.end(), std::mt19937(seed));
  return order;
}

std::string flag_text(const Flag& f) {
  std::string out;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (i) out += "|";
    out += subset_string(f.sets[i]);
  }
  return out;
}

// Line and hyperplane of a fixed point of Fl(1, ..., n-1; n).
std::pair<int, int> line_and_hyperplane(int n, const Flag& f) {
  const int a = std::countr_zero(f.sets.front());
  const int m = std::countr_zero(full_set(n) & ~f.sets.back());
  return {a, m};
}

// Characters of P^{n-1} x P^{n-1} at (a, m), as the factors (1 - chi^{-1}).
std::vector<IntVec> product_chart_factors(int n, int a, int m) {
  std::vector<IntVec> out;
  for (int q = 0; q < n; ++q)
    if (q != a) out.push_back(inverse_character(n, a, q));
  for (int i = 0; i < n; ++i)
    if (i != m) out.push_back(inverse_character(n, i, m));
  return out;
}

// Equivariant lifts of alpha^a at the point <e_i> and of beta^b at the hyperplane missing m.
LaurentPoly line_basis(int n, int a, int i) {
  if (i < a) return LaurentPoly(n);
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (int l = 0; l < a; ++l) p *= LaurentPoly::one_minus(inverse_character(n, i, l));
  return p;
}

LaurentPoly hyperplane_basis(int n, int b, int m) {
  if (m < b) return LaurentPoly(n);
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (int l = 0; l < b; ++l) p *= LaurentPoly::one_minus(inverse_character(n, l, m));
  return p;
}

Integer binomial(long long top, long long k) {
  if (k < 0 || top < k) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

}  // namespace

FlagSpace::FlagSpace(int n, std::vector<int> ranks) : n_(n), ranks_(std::move(ranks)) {
  if (n_ < 2) throw Error(ErrorKind::MalformedInput, "flag space needs n >= 2");
  if (n_ > kMaxGroundSet) throw Error(ErrorKind::TooLarge, "flag space too large");
  if (ranks_.empty()) throw Error(ErrorKind::MalformedInput, "flag space needs at least one rank");
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] <= 0 || ranks_[i] >= n_)
      throw Error(ErrorKind::MalformedInput, "rank " + std::to_string(ranks_[i]) + " outside 1.." + std::to_string(n_ - 1));
    if (i > 0 && ranks_[i] < ranks_[i - 1]) throw Error(ErrorKind::MalformedInput, "ranks must be nondecreasing");
  }
}

std::vector<int> FlagSpace::distinct_ranks() const {
  std::vector<int> out = ranks_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<int, int> FlagSpace::multiplicities() const {
  std::map<int, int> out;
  for (int k : ranks_) ++out[k];
  return out;
}

std::vector<Flag> fixed_points(const FlagSpace& space) {
  const int n = space.n();
  const auto& ranks = space.ranks();
  std::vector<Flag> out;
  Flag cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ranks.size()) {
      out.push_back(cur);
      return;
    }
    const Subset prev = i == 0 ? 0 : cur.sets.back();
    if (i > 0 && ranks[i] == ranks[i - 1]) {
      cur.sets.push_back(prev);
      self(self, i + 1);
      cur.sets.pop_back();
      return;
    }
    const Subset rest = full_set(n) & ~prev;
    for_each_subset(rest, [&](Subset add) {
      if (size_of(prev | add) != ranks[i]) return;
      cur.sets.push_back(prev | add);
      self(self, i + 1);
      cur.sets.pop_back();
    });
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fixed_point(const FlagSpace& space, const Flag& f) {
  const auto& ranks = space.ranks();
  if (f.sets.size() != ranks.size()) return false;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if ((f.sets[i] & ~full_set(space.n())) != 0) return false;
    if (size_of(f.sets[i]) != ranks[i]) return false;
    if (i > 0 && (f.sets[i - 1] & ~f.sets[i]) != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> chart_pairs(int n, const Flag& f) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Subset s : f.sets)
        if (contains(s, i) && !contains(s, j)) {
          out.emplace_back(i, j);
          break;
        }
    }
  return out;
}

std::vector<IntVec> chart_characters(int n, const Flag& f) {
  std::vector<IntVec> out;
  for (auto [i, j] : chart_pairs(n, f)) out.push_back(inverse_character(n, j, i));
  return out;
}

std::vector<Orbit> one_dim_orbits(const FlagSpace& space) {
  const int n = space.n();
  std::vector<Orbit> out;
  for (const Flag& f : fixed_points(space)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Flag g = f;
        for (auto& s : g.sets) s = swap_elements(s, i, j);
        if (!(f < g)) continue;
        // nested members cannot split i and j in both directions
        int src = i, dst = j;
        for (Subset s : f.sets)
          if (contains(s, j) && !contains(s, i)) {
            src = j;
            dst = i;
            break;
          }
        out.push_back({f, std::move(g), inverse_character(n, dst, src)});
      }
  }
  return out;
}

LaurentPoly EquivariantClass::at(const Flag& f) const {
  auto it = values_.find(f);
  return it == values_.end() ? LaurentPoly(space_.n()) : it->second;
}

void EquivariantClass::set(const Flag& f, LaurentPoly value) {
  if (!is_fixed_point(space_, f)) throw Error(ErrorKind::MalformedInput, flag_text(f) + " is not a fixed point");
  if (value.nvars() != space_.n()) throw Error(ErrorKind::DimensionMismatch, "value has the wrong number of variables");
  if (value.is_zero()) {
    values_.erase(f);
  } else {
    values_[f] = std::move(value);
  }
}

bool EquivariantClass::operator==(const EquivariantClass& o) const {
  return space_ == o.space_ && values_ == o.values_;
}

Verdict gkm_check(const EquivariantClass& c) {
  for (const auto& orbit : one_dim_orbits(c.space())) {
    const LaurentPoly diff = c.at(orbit.from) - c.at(orbit.to);
    if (!divide_one_minus(diff, orbit.character)) {
      Verdict v;
      v.ok = false;
      v.axiom = "GKM";
      v.message = "values at " + flag_text(orbit.from) + " and " + flag_text(orbit.to) +
                  " are not congruent modulo 1 - t^" + to_string(orbit.character);
      return v;
    }
  }
  return {};
}

EquivariantClass y_class(const FlagMatroid& f, int threads) {
  const int n = f.size();
  EquivariantClass out(FlagSpace(n, f.ranks()));
  const LatticePolytope poly = flag_polytope(f);
  const std::vector<Flag> flags = f.flags();
  std::vector<LaurentPoly> values(flags.size());
  detail::parallel_for(flags.size(), threads, [&](std::size_t i) {
    std::vector<IntVec> denom;
    for (auto [a, b] : chart_pairs(n, flags[i])) denom.push_back(inverse_character(n, a, b));
    values[i] = hilbert_numerator(cone_at_vertex(poly, flags[i].multiplicity(n)), denom);
  });
  for (std::size_t i = 0; i < flags.size(); ++i) out.set(flags[i], std::move(values[i]));
  const Verdict v = gkm_check(out);
  if (!v.ok) throw Error(ErrorKind::InexactDivision, "y-class fails GKM: " + v.message);
  return out;
}

EquivariantClass o1_class(const FlagSpace& space) {
  EquivariantClass out(space);
  for (const Flag& f : fixed_points(space)) out.set(f, LaurentPoly::monomial(f.multiplicity(space.n())));
  return out;
}

EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::SpaceMismatch, "classes live on different flag spaces");
  EquivariantClass out(a.space());
  for (const auto& [f, v] : a.values()) {
    auto it = b.values().find(f);
    if (it != b.values().end()) out.set(f, v * it->second);
  }
  return out;
}

EquivariantClass pullback(const EquivariantClass& a, const FlagSpace& target) {
  const FlagSpace& source = a.space();
  if (source.n() != target.n()) throw Error(ErrorKind::SpaceMismatch, "ground sets differ");
  const auto have = target.multiplicities();
  for (auto [k, mult] : source.multiplicities()) {
    auto it = have.find(k);
    if (it == have.end() || it->second < mult)
      throw Error(ErrorKind::SpaceMismatch, "target ranks do not refine the source ranks");
  }
  EquivariantClass out(target);
  for (const Flag& f : fixed_points(target)) {
    Flag sub;
    for (int k : source.ranks())
      for (Subset s : f.sets)
        if (size_of(s) == k) {
          sub.sets.push_back(s);
          break;
        }
    auto it = a.values().find(sub);
    if (it != a.values().end()) out.set(f, it->second);
  }
  return out;
}

FlagSpace incidence_space(const FlagSpace& s) {
  std::vector<int> ranks = {1};
  ranks.insert(ranks.end(), s.ranks().begin(), s.ranks().end());
  ranks.push_back(s.n() - 1);
  return FlagSpace(s.n(), std::move(ranks));
}

LaurentPoly ProductClass::at(int a, int m) const {
  auto it = values_.find({a, m});
  return it == values_.end() ? LaurentPoly(n_) : it->second;
}

void ProductClass::set(int a, int m, LaurentPoly value) {
  if (a < 0 || a >= n_ || m < 0 || m >= n_) throw Error(ErrorKind::OutOfRange, "fixed point outside P x P");
  if (value.nvars() != n_) throw Error(ErrorKind::DimensionMismatch, "value has the wrong number of variables");
  if (value.is_zero()) {
    values_.erase({a, m});
  } else {
    values_[{a, m}] = std::move(value);
  }
}

Verdict gkm_check(const ProductClass& c) {
  const int n = c.n();
  auto fail = [](std::string msg) {
    Verdict v;
    v.ok = false;
    v.axiom = "GKM";
    v.message = std::move(msg);
    return v;
  };
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        // moving the line from <e_a> to <e_b>
        if (!divide_one_minus(c.at(a, m) - c.at(b, m), inverse_character(n, b, a)))
          return fail("line move " + std::to_string(a) + "->" + std::to_string(b) + " at hyperplane " + std::to_string(m));
        // moving the hyperplane from missing a to missing b, which swaps b out and a in
        if (!divide_one_minus(c.at(m, a) - c.at(m, b), inverse_character(n, a, b)))
          return fail("hyperplane move " + std::to_string(a) + "->" + std::to_string(b) + " at line " + std::to_string(m));
      }
  return {};
}

namespace {

ProductClass pushforward_impl(const EquivariantClass& a, int threads, unsigned seed) {
  const FlagSpace& s = a.space();
  const int n = s.n();
  if (s.ranks().front() != 1 || s.ranks().back() != n - 1)
    throw Error(ErrorKind::SpaceMismatch, "pushforward needs a space Fl(1, ..., n-1; n)");
  // fibers, keyed by (line, missing element of the hyperplane)
  std::map<std::pair<int, int>, std::vector<const std::pair<const Flag, LaurentPoly>*>> fibers;
  for (const auto& entry : a.values()) fibers[line_and_hyperplane(n, entry.first)].push_back(&entry);
  std::vector<std::pair<int, int>> targets;
  for (const auto& [key, fiber] : fibers) targets.push_back(key);
  std::vector<LaurentPoly> results(targets.size(), LaurentPoly(n));
  const auto order = processing_order(targets.size(), seed);
  detail::parallel_for(targets.size(), threads, [&](std::size_t k) {
    const std::size_t idx = order[k];
    const auto [line, missing] = targets[idx];
    auto fiber = fibers.at(targets[idx]);
    if (seed != 0) std::shuffle(fiber.begin(), fiber.end(), std::mt19937(seed + static_cast<unsigned>(idx)));
    std::vector<KRational> terms;
    for (const auto* entry : fiber) {
      std::vector<IntVec> den;
      for (auto [i, j] : chart_pairs(n, entry->first)) den.push_back(inverse_character(n, i, j));
      terms.emplace_back(entry->second, std::move(den));
    }
    results[idx] = clear_denominator(kr_sum(terms, n), product_chart_factors(n, line, missing));
  });
  ProductClass out(n);
  for (std::size_t i = 0; i < targets.size(); ++i) out.set(targets[i].first, targets[i].second, std::move(results[i]));
  return out;
}

// Euler characteristics chi(Y * O(u, v)) by localization, each evaluated at t = 1
// along the weight curve, then matched against chi(alpha^a beta^b O(u, v)).
BivarClass reduce_by_euler_characteristics(const ProductClass& y, const IntVec& weights) {
  const int n = y.n();
  if (static_cast<int>(weights.size()) != n) throw Error(ErrorKind::DimensionMismatch, "one weight per variable");
  // every chart character e_i - e_j needs a nonzero weight
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (weights[i] == weights[j])
        throw Error(ErrorKind::BadWeights, "weights of t" + std::to_string(i) + " and t" + std::to_string(j) + " coincide");
  std::vector<std::vector<Rational>> chi(n, std::vector<Rational>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      // sum along the curve t_i = z^{w_i}; one variable keeps the common denominator small
      std::vector<KRational> terms;
      for (const auto& [key, value] : y.values()) {
        const auto [a, m] = key;
        IntVec twist = unit(n, a);
        for (auto& x : twist) x *= u;
        for (int i = 0; i < n; ++i)
          if (i != m) twist[i] += v;
        LaurentPoly num(1);
        for (const auto& [e, c] : value.terms()) num.add_term({dot(weights, e + twist)}, c);
        std::vector<IntVec> den;
        for (const auto& f : product_chart_factors(n, a, m)) den.push_back({dot(weights, f)});
        terms.emplace_back(std::move(num), std::move(den));
      }
      chi[u][v] = evaluate_at_one(kr_sum(terms, 1), IntVec{1});
    }
  // chi(alpha^a O(u)) = binom(u + n - 1 - a, n - 1 - a)
  RatMatrix b(n, n);
  for (int u = 0; u < n; ++u)
    for (int a = 0; a < n; ++a) b(u, a) = Rational(binomial(u + n - 1 - a, n - 1 - a));
  const RatMatrix binv = inverse(b);
  BivarClass out{n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n))};
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      Rational s = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) s += binv(a, u) * chi[u][v] * binv(c, v);
      if (boost::multiprecision::denominator(s) != 1)
        throw Error(ErrorKind::InexactDivision, "Euler characteristics give a non-integral coefficient");
      out.c[a][c] = boost::multiprecision::numerator(s);
    }
  return out;
}

}  // namespace

ProductClass pushforward_to_PxP(const EquivariantClass& a, int threads) { return pushforward_impl(a, threads, 0); }

BivarPoly BivarClass::as_tutte() const {
  BivarPoly p;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.add_term(b, a, c[a][b]);
  return p;
}

BivarClass to_nonequivariant(const ProductClass& y) {
  const int n = y.n();
  std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      LaurentPoly rest = y.at(i, m);
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= m; ++b) {
          if (a == i && b == m) continue;
          if (c[a][b].is_zero()) continue;
          rest -= c[a][b] * line_basis(n, a, i) * hyperplane_basis(n, b, m);
        }
      auto q = try_divide(rest, line_basis(n, i, i) * hyperplane_basis(n, m, m));
      if (!q)
        throw Error(ErrorKind::InexactDivision, "coefficient of alpha^" + std::to_string(i) + " beta^" +
                                                    std::to_string(m) + " is not a Laurent polynomial");
      c[i][m] = std::move(*q);
    }
  BivarClass out{n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.c[a][b] = c[a][b].sum_of_coefficients();
  return out;
}

KTuttePipeline k_tutte_pipeline(const FlagMatroid& f, const KTutteOptions& options) {
  EquivariantClass y = y_class(f, options.threads);
  EquivariantClass twisted = multiply(y, o1_class(y.space()));
  EquivariantClass pulled = pullback(twisted, incidence_space(y.space()));
  ProductClass pushed = pushforward_impl(pulled, options.threads, options.order_seed);
  BivarClass reduced = options.weights ? reduce_by_euler_characteristics(pushed, *options.weights)
                                       : to_nonequivariant(pushed);
  BivarPoly tutte = reduced.as_tutte();
  return {std::move(y), std::move(twisted), std::move(pulled), std::move(pushed), std::move(reduced),
          std::move(tutte)};
}

BivarPoly k_tutte(const FlagMatroid& f, const KTutteOptions& options) {
  return k_tutte_pipeline(f, options).tutte;
}

}  // namespace flagtutte
