#include "flagtutte/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

IntVec canonical_direction(const IntVec& a, bool& flipped) {
  flipped = false;
  for (long long x : a) {
    if (x == 0) continue;
    flipped = x < 0;
    break;
  }
  return flipped ? -a : a;
}

LaurentPoly product_of_one_minus(int n, const std::vector<IntVec>& factors) {
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (const auto& a : factors) p *= LaurentPoly::one_minus(a);
  return p;
}

// Multiset difference of sorted vectors.
std::vector<IntVec> minus(const std::vector<IntVec>& big, const std::vector<IntVec>& small) {
  std::vector<IntVec> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}


// Fast path for sums over a common denominator: exponents packed into biased
// fields of one 64-bit key, so a shift by a fixed exponent is an addition that
// keeps the order, and multiplying by (1 - t^a) is a merge. Coefficients stay
// in int64; any overflow sends the caller back to the generic arithmetic.
class PackedSum {
 public:
  using Terms = std::vector<std::pair<std::uint64_t, long long>>;

  PackedSum(int n, const IntVec& lo, const IntVec& hi) : n_(n), bits_(n == 0 ? 64 : 64 / n) {
    ok_ = bits_ >= 4 && bits_ < 64;
    if (!ok_) return;
    bias_ = 1LL << (bits_ - 1);
    for (int i = 0; i < n; ++i)
      if (lo[i] < -bias_ || hi[i] >= bias_) ok_ = false;
  }
  bool ok() const { return ok_; }

  std::uint64_t key(const IntVec& e) const {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(e[i] + bias_) << (bits_ * i);
    return k;
  }
  std::uint64_t delta(const IntVec& a) const {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k += static_cast<std::uint64_t>(a[i]) << (bits_ * i);
    return k;
  }
  IntVec unpack(std::uint64_t k) const {
    IntVec e(n_);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int i = 0; i < n_; ++i) e[i] = static_cast<long long>((k >> (bits_ * i)) & mask) - bias_;
    return e;
  }

  bool load(const LaurentPoly& p, Terms& out) const {
    out.clear();
    for (const auto& [e, c] : p.terms()) {
      if (boost::multiprecision::abs(c) > Integer(1LL << 62)) return false;
      out.emplace_back(key(e), static_cast<long long>(c));
    }
    std::sort(out.begin(), out.end());
    return true;
  }

  // p * (1 - t^a)
  bool times_one_minus(Terms& p, const IntVec& a) const {
    const std::uint64_t d = delta(a);
    Terms out;
    out.reserve(2 * p.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < p.size()) {
      if (j == p.size() || (i < p.size() && p[i].first < p[j].first + d)) {
        out.push_back(p[i++]);
      } else if (i == p.size() || p[j].first + d < p[i].first) {
        out.emplace_back(p[j].first + d, -p[j].second);
        ++j;
      } else {
        long long c = 0;
        if (__builtin_sub_overflow(p[i].second, p[j].second, &c)) return false;
        if (c != 0) out.emplace_back(p[i].first, c);
        ++i;
        ++j;
      }
    }
    p = std::move(out);
    return true;
  }

  bool in_box(std::uint64_t k, const IntVec& lo, const IntVec& hi) const {
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int i = 0; i < n_; ++i) {
      const long long x = static_cast<long long>((k >> (bits_ * i)) & mask) - bias_;
      if (x < lo[i] || x > hi[i]) return false;
    }
    return true;
  }

  // p / (1 - t^a) when exact, with the quotient inside the box [lo, hi].
  // Along each line the quotient is a running sum of p, scanned in key order.
  bool divide_one_minus(Terms& p, IntVec a, const IntVec& lo, const IntVec& hi) const {
    // make the highest nonzero coordinate positive so t^a raises the key
    int top = n_ - 1;
    while (top >= 0 && a[top] == 0) --top;
    if (top < 0) return false;
    const bool flipped = a[top] < 0;
    if (flipped) a = -a;  // 1 - t^{-a} = -t^{-a} (1 - t^a)
    const std::uint64_t d = delta(a);
    using Carry = std::pair<std::uint64_t, long long>;
    std::priority_queue<Carry, std::vector<Carry>, std::greater<>> carries;
    Terms out;
    std::size_t i = 0;
    while (i < p.size() || !carries.empty()) {
      std::uint64_t x;
      long long c = 0;
      if (carries.empty() || (i < p.size() && p[i].first <= carries.top().first)) {
        x = p[i].first;
      } else {
        x = carries.top().first;
      }
      if (i < p.size() && p[i].first == x) c = p[i++].second;
      if (!carries.empty() && carries.top().first == x) {
        if (__builtin_add_overflow(c, carries.top().second, &c)) return false;
        carries.pop();
      }
      if (c == 0) continue;
      out.emplace_back(x, c);
      if (!in_box(x + d, lo, hi)) return false;
      carries.emplace(x + d, c);
    }
    if (flipped)
      for (auto& t : out) {
        t.first += d;
        t.second = -t.second;
      }
    p = std::move(out);
    return true;
  }

  // combine equal keys of a concatenation
  bool collapse(Terms& p) const {
    std::sort(p.begin(), p.end());
    Terms out;
    for (const auto& [k, c] : p) {
      if (!out.empty() && out.back().first == k) {
        if (__builtin_add_overflow(out.back().second, c, &out.back().second)) return false;
      } else {
        out.emplace_back(k, c);
      }
    }
    p.clear();
    for (const auto& t : out)
      if (t.second != 0) p.push_back(t);
    return true;
  }

 private:
  int n_;
  int bits_;
  long long bias_ = 0;
  bool ok_ = false;
};

std::optional<LaurentPoly> packed_numerator(int n, const std::vector<KRational>& norm,
                                            const std::vector<IntVec>& lcm) {
  IntVec lo(n, 0), hi(n, 0);
  std::vector<std::vector<IntVec>> extras;
  for (const auto& t : norm) {
    extras.push_back(minus(lcm, t.den));
    IntVec tlo(n, 0), thi(n, 0);
    bool first = true;
    for (const auto& [e, c] : t.num.terms()) {
      for (int i = 0; i < n; ++i) {
        tlo[i] = first ? e[i] : std::min(tlo[i], e[i]);
        thi[i] = first ? e[i] : std::max(thi[i], e[i]);
      }
      first = false;
    }
    for (const auto& a : extras.back())
      for (int i = 0; i < n; ++i) (a[i] < 0 ? tlo[i] : thi[i]) += a[i];
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], tlo[i]);
      hi[i] = std::max(hi[i], thi[i]);
    }
  }
  PackedSum ps(n, lo, hi);
  if (!ps.ok()) return std::nullopt;
  PackedSum::Terms total, p;
  for (std::size_t k = 0; k < norm.size(); ++k) {
    if (!ps.load(norm[k].num, p)) return std::nullopt;
    for (const auto& a : extras[k])
      if (!ps.times_one_minus(p, a)) return std::nullopt;
    total.insert(total.end(), p.begin(), p.end());
    if (total.size() > (1u << 22) && !ps.collapse(total)) return std::nullopt;
  }
  if (!ps.collapse(total)) return std::nullopt;
  LaurentPoly out(n);
  for (const auto& [k, c] : total) out.add_term(ps.unpack(k), c);
  return out;
}

void exponent_box(const LaurentPoly& p, IntVec& lo, IntVec& hi) {
  const int n = p.nvars();
  lo.assign(n, 0);
  hi.assign(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < n; ++i) {
      lo[i] = first ? e[i] : std::min(lo[i], e[i]);
      hi[i] = first ? e[i] : std::max(hi[i], e[i]);
    }
    first = false;
  }
}

// num * prod (1 - t^a) over `extra`, divided by prod (1 - t^u) over `pending`.
std::optional<LaurentPoly> packed_clear(const LaurentPoly& num, const std::vector<IntVec>& extra,
                                        const std::vector<IntVec>& pending) {
  const int n = num.nvars();
  if (num.is_zero()) return num;
  IntVec lo, hi;
  exponent_box(num, lo, hi);
  for (const auto& a : extra)
    for (int i = 0; i < n; ++i) (a[i] < 0 ? lo[i] : hi[i]) += a[i];
  PackedSum ps(n, lo, hi);
  if (!ps.ok()) return std::nullopt;
  PackedSum::Terms p;
  if (!ps.load(num, p)) return std::nullopt;
  for (const auto& a : extra)
    if (!ps.times_one_minus(p, a)) return std::nullopt;
  for (const auto& u : pending)
    if (!ps.divide_one_minus(p, u, lo, hi)) return std::nullopt;
  LaurentPoly out(n);
  for (const auto& [k, c] : p) out.add_term(ps.unpack(k), c);
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) {
  LaurentPoly p(nvars);
  p.add_term(IntVec(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const IntVec& exp, const Integer& c) {
  LaurentPoly p(static_cast<int>(exp.size()));
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const IntVec& a) {
  LaurentPoly p = constant(static_cast<int>(a.size()), 1);
  p.add_term(a, -1);
  return p;
}

Integer LaurentPoly::coeff(const IntVec& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const IntVec& exp, const Integer& c) {
  if (static_cast<int>(exp.size()) != n_)
    throw Error(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const IntVec& e) const {
  LaurentPoly out(n_);
  for (const auto& [exp, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), exp + e, c);
  return out;
}

Integer LaurentPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [exp, c] : terms_) s += c;
  return s;
}

void LaurentPoly::check_dims(const LaurentPoly& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::DimensionMismatch, "Laurent polynomials in different rings");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_dims(o);
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_dims(o);
  for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_dims(b);
  LaurentPoly out(a.n_);
  IntVec e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [exp, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest lex term first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i);
      if (exp[i] != 1) mono += "^" + (exp[i] < 0 ? "(" + std::to_string(exp[i]) + ")" : std::to_string(exp[i]));
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const IntVec& a) {
  if (static_cast<int>(a.size()) != p.nvars())
    throw Error(ErrorKind::DimensionMismatch, "binomial factor in a different ring");
  if (is_zero(a)) return std::nullopt;
  if (p.is_zero()) return p;
  // Along each line e0 + k*a the quotient is the running sum of p, which must
  // return to zero at the end of the line.
  bool flipped = false;
  const IntVec v = canonical_direction(a, flipped);
  int pivot = 0;
  while (v[pivot] == 0) ++pivot;
  auto floor_div = [](long long x, long long d) {
    long long q = x / d;
    if ((x % d != 0) && (x < 0)) --q;
    return q;
  };
  std::map<IntVec, std::vector<std::pair<long long, Integer>>> lines;
  for (const auto& [exp, c] : p.terms()) {
    const long long k = floor_div(exp[pivot], v[pivot]);
    IntVec base = exp;
    for (std::size_t i = 0; i < base.size(); ++i) base[i] -= k * v[i];
    lines[base].emplace_back(k, c);
  }
  // With v the canonical direction, p = (1 - t^v) q gives q_k = sum_{j<=k} p_j.
  // For a flipped factor, 1 - t^{-v} = -t^{-v}(1 - t^v): divide by (1 - t^v),
  // then multiply by -t^{v}.
  LaurentPoly q(p.nvars());
  for (auto& [base, pts] : lines) {
    std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Integer run = 0;
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
      run += pts[idx].second;
      const long long next = idx + 1 < pts.size() ? pts[idx + 1].first : pts[idx].first + 1;
      if (idx + 1 == pts.size()) {
        if (run != 0) return std::nullopt;
        break;
      }
      if (run == 0) continue;
      for (long long k = pts[idx].first; k < next; ++k) {
        IntVec e = base;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * v[i];
        q.add_term(e, run);
      }
    }
  }
  if (flipped) q = -q.shifted(v);
  return q;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  if (p.nvars() != q.nvars()) throw Error(ErrorKind::DimensionMismatch, "division across rings");
  if (p.is_zero()) return p;
  // binomial fast path
  if (q.size() == 2) {
    auto lo = q.terms().begin();
    auto hi = std::next(lo);
    if (lo->second == -hi->second || lo->second == hi->second) {
      // q = c t^u (1 -/+ t^{w-u}) with c = lo coeff
      const Integer c = lo->second;
      const IntVec u = lo->first;
      const IntVec w = hi->first - u;
      LaurentPoly scaled(p.nvars());
      for (const auto& [exp, coef] : p.terms()) {
        if (coef % c != 0) return std::nullopt;
        scaled.add_term(exp - u, coef / c);
      }
      if (hi->second == -c) return divide_one_minus(scaled, w);
      // 1 + t^w: divide by 1 - t^{2w}, then multiply by 1 - t^w
      auto r = divide_one_minus(scaled * LaurentPoly::one_minus(w), w + w);
      return r;
    }
  }
  const int n = p.nvars();
  auto bounds = [n](const LaurentPoly& f, IntVec& lo, IntVec& hi) {
    lo.assign(n, 0);
    hi.assign(n, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      for (int i = 0; i < n; ++i) {
        lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max(hi[i], e[i]);
      }
      first = false;
    }
  };
  IntVec plo, phi, qlo, qhi;
  bounds(p, plo, phi);
  bounds(q, qlo, qhi);
  IntVec lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = plo[i] - qlo[i];
    hi[i] = phi[i] - qhi[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [qexp, qcoef] = *q.terms().rbegin();
  LaurentPoly rem = p;
  LaurentPoly out(n);
  while (!rem.is_zero()) {
    const auto& [rexp, rcoef] = *rem.terms().rbegin();
    if (rcoef % qcoef != 0) return std::nullopt;
    IntVec e = rexp - qexp;
    for (int i = 0; i < n; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    LaurentPoly term = LaurentPoly::monomial(e, rcoef / qcoef);
    out += term;
    rem -= term * q;
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw Error(ErrorKind::InexactDivision, "(" + p.to_string() + ") / (" + q.to_string() + ")");
  return *r;
}

KRational kr_normalize(KRational f) {
  IntVec shift(f.nvars(), 0);
  bool negate = false;
  for (auto& a : f.den) {
    if (is_zero(a)) throw Error(ErrorKind::InexactDivision, "denominator factor 1 - t^0 vanishes");
    bool flipped = false;
    IntVec c = canonical_direction(a, flipped);
    if (flipped) {  // 1/(1 - t^{-c}) = -t^c/(1 - t^c)
      shift = shift + c;
      negate = !negate;
    }
    a = std::move(c);
  }
  if (!is_zero(shift)) f.num = f.num.shifted(shift);
  if (negate) f.num = -f.num;
  std::sort(f.den.begin(), f.den.end());
  return f;
}

KRational kr_reduce(KRational f) {
  std::sort(f.den.begin(), f.den.end());
  std::vector<IntVec> kept;
  for (const auto& a : f.den) {
    if (is_zero(a)) throw Error(ErrorKind::InexactDivision, "denominator factor 1 - t^0 vanishes");
    if (auto q = divide_one_minus(f.num, a)) {
      f.num = std::move(*q);
    } else {
      kept.push_back(a);
    }
  }
  f.den = std::move(kept);
  if (f.num.is_zero()) f.den.clear();
  return f;
}

KRational kr_add(const KRational& a, const KRational& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::DimensionMismatch, "sum across rings");
  KRational x = a, y = b;
  std::sort(x.den.begin(), x.den.end());
  // Flip factors of y that appear in x only with the opposite direction.
  std::vector<IntVec> unmatched = x.den;
  for (auto& v : y.den) {
    auto same = std::find(unmatched.begin(), unmatched.end(), v);
    if (same != unmatched.end()) {
      unmatched.erase(same);
      continue;
    }
    auto opposite = std::find(unmatched.begin(), unmatched.end(), -v);
    if (opposite == unmatched.end()) continue;
    unmatched.erase(opposite);
    v = -v;
    y.num = -y.num.shifted(v);  // 1/(1 - t^{-v}) = -t^v/(1 - t^v)
  }
  std::sort(y.den.begin(), y.den.end());
  std::vector<IntVec> lcm;
  std::set_union(x.den.begin(), x.den.end(), y.den.begin(), y.den.end(), std::back_inserter(lcm));
  const int n = a.nvars();
  LaurentPoly num = x.num * product_of_one_minus(n, minus(lcm, x.den)) +
                    y.num * product_of_one_minus(n, minus(lcm, y.den));
  return kr_reduce(KRational(std::move(num), std::move(lcm)));
}

KRational kr_sum(const std::vector<KRational>& terms, int nvars) {
  std::vector<KRational> norm;
  norm.reserve(terms.size());
  std::vector<IntVec> lcm;
  for (const auto& t : terms) {
    if (t.nvars() != nvars) throw Error(ErrorKind::DimensionMismatch, "sum across rings");
    if (t.num.is_zero()) continue;
    norm.push_back(kr_normalize(t));
    std::vector<IntVec> merged;
    std::set_union(lcm.begin(), lcm.end(), norm.back().den.begin(), norm.back().den.end(),
                   std::back_inserter(merged));
    lcm = std::move(merged);
  }
  LaurentPoly num(nvars);
  if (auto fast = packed_numerator(nvars, norm, lcm)) {
    num = std::move(*fast);
  } else {
    for (const auto& t : norm) num += t.num * product_of_one_minus(nvars, minus(lcm, t.den));
  }
  if (num.is_zero()) lcm.clear();
  return KRational(std::move(num), std::move(lcm));
}

KRational kr_mul(const KRational& a, const KRational& b) {
  std::vector<IntVec> den = a.den;
  den.insert(den.end(), b.den.begin(), b.den.end());
  return kr_reduce(KRational(a.num * b.num, std::move(den)));
}

KRational kr_negate(KRational a) {
  a.num = -a.num;
  return a;
}

bool kr_equal(const KRational& a, const KRational& b) {
  const int n = a.nvars();
  if (n != b.nvars()) return false;
  return a.num * product_of_one_minus(n, b.den) == b.num * product_of_one_minus(n, a.den);
}

LaurentPoly clear_denominator(const KRational& f, const std::vector<IntVec>& factors) {
  std::vector<IntVec> extra = factors;
  std::vector<IntVec> pending;
  IntVec shift(f.nvars(), 0);
  bool negate = false;
  for (const auto& u : f.den) {
    auto same = std::find(extra.begin(), extra.end(), u);
    if (same != extra.end()) {
      extra.erase(same);
      continue;
    }
    auto opposite = std::find(extra.begin(), extra.end(), -u);
    if (opposite != extra.end()) {
      extra.erase(opposite);
      shift = shift - u;  // (1 - t^{-u})/(1 - t^u) = -t^{-u}
      negate = !negate;
      continue;
    }
    pending.push_back(u);
  }
  LaurentPoly num = is_zero(shift) ? f.num : f.num.shifted(shift);
  if (negate) num = -num;
  if (auto fast = packed_clear(num, extra, pending)) return std::move(*fast);
  for (const auto& a : extra) num *= LaurentPoly::one_minus(a);
  for (const auto& u : pending) {
    auto q = divide_one_minus(num, u);
    if (!q) throw Error(ErrorKind::InexactDivision, "denominator factor " + to_string(u) + " does not cancel");
    num = std::move(*q);
  }
  return num;
}

std::optional<LaurentPoly> kr_to_poly(const KRational& f) {
  KRational r = kr_reduce(f);
  if (!r.den.empty()) return std::nullopt;
  return r.num;
}

Rational evaluate_at_one(const KRational& f, const IntVec& weights) {
  const int n = f.nvars();
  if (static_cast<int>(weights.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "weight vector length differs from variable count");
  // each 1 - z^m is (1 - z) times a cofactor whose value at z = 1 is m
  Integer cofactor = 1;
  for (const auto& a : f.den) {
    const long long m = dot(weights, a);
    if (m == 0) throw Error(ErrorKind::BadWeights, "denominator factor " + to_string(a) + " is constant");
    cofactor *= m;
  }
  std::map<long long, Integer> uni;
  for (const auto& [exp, c] : f.num.terms()) {
    uni[dot(weights, exp)] += c;
  }
  std::vector<std::pair<long long, Integer>> coeffs;
  for (auto& [d, c] : uni)
    if (c != 0) coeffs.emplace_back(d, c);
  const std::size_t order = f.den.size();
  for (std::size_t step = 0; step < order; ++step) {
    if (coeffs.empty()) return Rational(0);
    // divide by (1 - z): prefix sums over consecutive degrees
    Integer total = 0;
    for (const auto& [d, c] : coeffs) total += c;
    if (total != 0) throw Error(ErrorKind::PoleAtOne, "numerator vanishes to lower order than the denominator");
    std::vector<std::pair<long long, Integer>> next;
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
      run += coeffs[i].second;
      if (run == 0) continue;
      for (long long d = coeffs[i].first; d < coeffs[i + 1].first; ++d) next.emplace_back(d, run);
    }
    coeffs = std::move(next);
  }
  Integer value = 0;
  for (const auto& [d, c] : coeffs) value += c;
  return Rational(value) / Rational(cofactor);
}

}  // namespace flagtutte
