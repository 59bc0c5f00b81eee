#include "flagtutte/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "flagtutte/error.hpp"
#include "flagtutte/subset.hpp"

namespace flagtutte {

namespace {

constexpr int kMaxScanVectors = 64;

long long to_ll(const Integer& v) {
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
    throw Error(ErrorKind::TooLarge, "lattice coordinate does not fit in 64 bits");
  return static_cast<long long>(v);
}

// Primitive normal of the hyperplane spanned by rows (d-1 vectors in Z^d);
// zero when they are dependent.
IntVec hyperplane_normal(const std::vector<const IntVec*>& rows, int d) {
  RatMatrix a(static_cast<int>(rows.size()), d);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = (*rows[i])[j];
  // row reduce and read off the one-dimensional kernel
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < d && row < a.rows; ++c) {
    int p = -1;
    for (int i = row; i < a.rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < d; ++j) std::swap(a(row, j), a(p, j));
    Rational inv = 1 / a(row, c);
    for (int j = 0; j < d; ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j < d; ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != d - 1) return IntVec(d, 0);
  std::vector<bool> is_pivot(d, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> h(d, 0);
  h[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = -a(static_cast<int>(r), free_col);
  Integer lcm = 1;
  for (const auto& x : h) {
    const Integer den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  IntVec out(d);
  for (int j = 0; j < d; ++j) out[j] = to_ll(boost::multiprecision::numerator(Rational(h[j] * lcm)));
  return primitive(out);
}

int rank_of(const std::vector<IntVec>& vs, int d) {
  RatMatrix a(static_cast<int>(vs.size()), d);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = vs[i][j];
  return rank(a);
}

RatMatrix columns_rational(const std::vector<IntVec>& cols, int d) {
  RatMatrix m(d, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < d; ++i) m(i, j) = cols[j][i];
  return m;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const IntVec& v) {
  std::vector<Rational> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

IntVec lattice_coordinates(const IntMatrix& basis, const IntVec& x) {
  std::vector<Rational> y;
  if (!solve_in_span(basis, x, y)) throw Error(ErrorKind::DimensionMismatch, "vector outside the cone lattice");
  IntVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (boost::multiprecision::denominator(y[i]) != 1)
      throw Error(ErrorKind::DimensionMismatch, "vector outside the cone lattice");
    out[i] = to_ll(boost::multiprecision::numerator(y[i]));
  }
  return out;
}

IntVec ambient(const IntMatrix& basis, const IntVec& y) {
  IntVec x(basis.rows, 0);
  for (int i = 0; i < basis.rows; ++i) {
    Integer s = 0;
    for (int j = 0; j < basis.cols; ++j) s += basis(i, j) * y[j];
    x[i] = to_ll(s);
  }
  return x;
}


// Double description: extreme rays of {h : h.c >= 0 for c in rows}, where the
// rows span Q^d so the cone is pointed. Zero sets are bitmasks over rows.
std::vector<IntVec> dual_extreme_rays(const std::vector<IntVec>& rows, int d) {
  struct Ray {
    IntVec h;
    std::uint64_t zeros;
  };
  const int m = static_cast<int>(rows.size());
  std::vector<int> basis_rows;
  std::vector<IntVec> picked;
  for (int i = 0; i < m && static_cast<int>(picked.size()) < d; ++i) {
    picked.push_back(rows[i]);
    if (rank_of(picked, d) == static_cast<int>(picked.size())) {
      basis_rows.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  if (static_cast<int>(basis_rows.size()) != d)
    throw Error(ErrorKind::DimensionMismatch, "rows do not span");

  // simplicial start: columns of the inverse of the chosen rows
  const RatMatrix inv = inverse(columns_rational(picked, d));
  std::vector<Ray> rays;
  for (int k = 0; k < d; ++k) {
    // row k of inv^T is the functional dual to picked[k]
    std::vector<Rational> col(d);
    for (int j = 0; j < d; ++j) col[j] = inv(k, j);
    Integer lcm = 1;
    for (const auto& x : col) {
      const Integer den = boost::multiprecision::denominator(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    IntVec h(d);
    for (int j = 0; j < d; ++j) h[j] = to_ll(boost::multiprecision::numerator(Rational(col[j] * lcm)));
    rays.push_back({primitive(h), 0});
  }
  auto zero_mask = [&](const IntVec& h, const std::vector<bool>& done) {
    std::uint64_t z = 0;
    for (int i = 0; i < m; ++i)
      if (done[i] && dot(h, rows[i]) == 0) z |= std::uint64_t{1} << i;
    return z;
  };
  std::vector<bool> done(m, false);
  for (int i : basis_rows) done[i] = true;
  for (auto& r : rays) r.zeros = zero_mask(r.h, done);

  for (int i = 0; i < m; ++i) {
    if (done[i]) continue;
    done[i] = true;
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::vector<Ray> pos, neg, next;
    std::vector<long long> pv, nv;
    for (auto& r : rays) {
      const long long v = dot(r.h, rows[i]);
      if (v == 0) {
        r.zeros |= bit;
        next.push_back(r);
      } else if (v > 0) {
        pos.push_back(r);
        pv.push_back(v);
      } else {
        neg.push_back(r);
        nv.push_back(-v);
      }
    }
    for (std::size_t a = 0; a < pos.size(); ++a) {
      for (std::size_t b = 0; b < neg.size(); ++b) {
        const std::uint64_t common = pos[a].zeros & neg[b].zeros;
        if (std::popcount(common) < d - 2) continue;
        // adjacency: no other ray vanishes on all of `common`
        bool adjacent = true;
        for (const auto& r : rays) {
          if ((r.zeros & common) == common && r.h != pos[a].h && r.h != neg[b].h) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec h(d);
        for (int j = 0; j < d; ++j) {
          long long u = 0, w = 0;
          if (__builtin_mul_overflow(nv[b], pos[a].h[j], &u) ||
              __builtin_mul_overflow(pv[a], neg[b].h[j], &w) || __builtin_add_overflow(u, w, &h[j]))
            throw Error(ErrorKind::TooLarge, "facet scan overflow");
        }
        next.push_back({primitive(h), common | bit});
      }
    }
    for (std::size_t a = 0; a < pos.size(); ++a) next.push_back(pos[a]);
    rays = std::move(next);
  }
  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(std::move(r.h));
  return out;
}

}  // namespace

RationalCone::RationalCone(std::vector<IntVec> generators, int ambient_dim)
    : n_(ambient_dim), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (static_cast<int>(g.size()) != n_)
      throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
  setup_lattice();
  std::set<IntVec> prim;
  for (const auto& g : generators_)
    if (!is_zero(g)) prim.insert(primitive(lattice_coordinates(basis_, g)));
  scan_facets(std::vector<IntVec>(prim.begin(), prim.end()));
}

RationalCone RationalCone::from_extreme_rays(std::vector<IntVec> rays, int ambient_dim,
                                             std::vector<IntVec> generators) {
  RationalCone c;
  c.n_ = ambient_dim;
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != ambient_dim || is_zero(r))
      throw Error(ErrorKind::DimensionMismatch, "bad extreme ray");
  c.generators_ = rays;
  c.setup_lattice();
  if (!generators.empty()) c.generators_ = std::move(generators);
  std::set<IntVec> prim;
  for (const auto& r : rays) prim.insert(primitive(c.coordinates(r).value()));
  c.scan_facets(std::vector<IntVec>(prim.begin(), prim.end()));
  return c;
}

void RationalCone::setup_lattice() {
  std::vector<IntVec> nonzero;
  for (const auto& g : generators_)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) {
    basis_ = IntMatrix(n_, 0);
    d_ = 0;
    return;
  }
  basis_ = saturation_basis(columns_matrix(nonzero, n_));
  d_ = basis_.cols;
}

void RationalCone::scan_facets(const std::vector<IntVec>& candidates) {
  facets_.clear();
  rays_.clear();
  pointed_ = true;
  if (d_ == 0) {
    setup_ambient_description();
    return;
  }
  const int m = static_cast<int>(candidates.size());
  if (m > kMaxScanVectors) throw Error(ErrorKind::TooLarge, "too many generators for the facet scan");
  const std::vector<IntVec> dual = dual_extreme_rays(candidates, d_);
  std::set<IntVec> normals(dual.begin(), dual.end());
  facets_.assign(normals.begin(), normals.end());
  pointed_ = rank_of(facets_, d_) == d_;
  if (!pointed_) {
    setup_ambient_description();
    return;
  }
  for (const auto& c : candidates) {
    std::vector<IntVec> tight;
    for (const auto& h : facets_)
      if (dot(h, c) == 0) tight.push_back(h);
    if (rank_of(tight, d_) == d_ - 1) rays_.push_back(from_coordinates(c));
  }
  std::sort(rays_.begin(), rays_.end());
  setup_ambient_description();
}

namespace {

struct AmbientForm {
  std::vector<IntVec> equations;
  std::vector<IntVec> functionals;
};

// Equations of span(basis), plus for each functional h on lattice coordinates
// an integer functional on Z^n that equals a positive multiple of h on the span.
AmbientForm ambient_form(const IntMatrix& basis, const std::vector<std::vector<Rational>>& hs) {
  const int n = basis.rows, d = basis.cols;
  AmbientForm out;
  IntMatrix bt(d, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) bt(j, i) = basis(i, j);
  const IntMatrix ker = d == 0 ? IntMatrix::identity(n) : integer_kernel(bt);
  for (int c = 0; c < ker.cols; ++c) {
    IntVec e(n);
    for (int i = 0; i < n; ++i) e[i] = to_ll(ker(i, c));
    out.equations.push_back(primitive(e));
  }
  if (d == 0) return out;
  // left inverse of the basis through d independent rows
  std::vector<int> rows;
  std::vector<IntVec> picked;
  for (int i = 0; i < n && static_cast<int>(rows.size()) < d; ++i) {
    IntVec r(d);
    for (int j = 0; j < d; ++j) r[j] = to_ll(basis(i, j));
    picked.push_back(r);
    if (rank_of(picked, d) == static_cast<int>(picked.size())) {
      rows.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  RatMatrix sub(d, d);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < d; ++j) sub(a, j) = basis(rows[a], j);
  const RatMatrix sub_inv = inverse(sub);
  for (const auto& h : hs) {
    std::vector<Rational> amb(n, 0);
    for (int a = 0; a < d; ++a) {
      Rational coef = 0;
      for (int j = 0; j < d; ++j) coef += h[j] * sub_inv(j, a);
      amb[rows[a]] = coef;
    }
    Integer lcm = 1;
    for (const auto& x : amb) {
      const Integer den = boost::multiprecision::denominator(x);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = to_ll(boost::multiprecision::numerator(Rational(amb[i] * lcm)));
    out.functionals.push_back(primitive(v));
  }
  return out;
}

}  // namespace

void RationalCone::setup_ambient_description() {
  std::vector<std::vector<Rational>> hs;
  for (const auto& h : facets_) hs.emplace_back(h.begin(), h.end());
  auto form = ambient_form(basis_, hs);
  ambient_equations_ = std::move(form.equations);
  ambient_facets_ = std::move(form.functionals);
}

std::optional<IntVec> RationalCone::coordinates(const IntVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "wrong vector length");
  if (d_ == 0) {
    if (!is_zero(x)) return std::nullopt;
    return IntVec{};
  }
  std::vector<Rational> y;
  if (!solve_in_span(basis_, x, y)) return std::nullopt;
  IntVec out(d_);
  for (int i = 0; i < d_; ++i) {
    if (boost::multiprecision::denominator(y[i]) != 1) return std::nullopt;
    out[i] = to_ll(boost::multiprecision::numerator(y[i]));
  }
  return out;
}

IntVec RationalCone::from_coordinates(const IntVec& y) const { return ambient(basis_, y); }

bool RationalCone::contains(const IntVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "wrong vector length");
  for (const auto& e : ambient_equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& h : ambient_facets_)
    if (dot(h, x) < 0) return false;
  return true;
}

Integer HalfOpenSimplicialCone::index() const {
  const int d = lattice.cols;
  if (d == 0) return 1;
  std::vector<IntVec> cols;
  for (const auto& g : generators) cols.push_back(lattice_coordinates(lattice, g));
  Rational det = determinant(columns_rational(cols, d));
  return boost::multiprecision::abs(boost::multiprecision::numerator(det));
}

std::vector<IntVec> HalfOpenSimplicialCone::parallelepiped_points() const {
  const int d = lattice.cols;
  if (d == 0) return {IntVec(lattice.rows, 0)};
  std::vector<IntVec> cols;
  for (const auto& g : generators) cols.push_back(lattice_coordinates(lattice, g));
  IntMatrix u = columns_matrix(cols, d);
  const RatMatrix u_rat = to_rational(u);
  const RatMatrix u_inv = inverse(u_rat);
  const SmithForm snf = smith_normal_form(u);
  std::vector<long long> moduli(d);
  for (int i = 0; i < d; ++i) moduli[i] = to_ll(boost::multiprecision::abs(snf.d(i, i)));

  std::vector<IntVec> out;
  IntVec c(d, 0);
  while (true) {
    // representative x = S^{-1} c of a class of Z^d / U Z^d
    IntVec x(d, 0);
    for (int i = 0; i < d; ++i) {
      Integer s = 0;
      for (int j = 0; j < d; ++j) s += snf.u_inv(i, j) * c[j];
      x[i] = to_ll(s);
    }
    std::vector<Rational> mu = mat_vec(u_inv, x);
    for (int i = 0; i < d; ++i) {
      // fractional part in [0,1), or (0,1] on an open facet
      Integer fl = boost::multiprecision::numerator(mu[i]) / boost::multiprecision::denominator(mu[i]);
      if (mu[i] < 0 && Rational(fl) != mu[i]) fl -= 1;
      mu[i] -= fl;
      if (open[i] && mu[i] == 0) mu[i] = 1;
    }
    IntVec y(d, 0);
    for (int i = 0; i < d; ++i) {
      Rational s = 0;
      for (int j = 0; j < d; ++j) s += u_rat(i, j) * mu[j];
      y[i] = to_ll(boost::multiprecision::numerator(s));
    }
    out.push_back(ambient(lattice, y));
    int pos = 0;
    while (pos < d && ++c[pos] >= moduli[pos]) c[pos++] = 0;
    if (pos == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void HalfOpenSimplicialCone::prepare() {
  const int d = lattice.cols;
  std::vector<std::vector<Rational>> hs;
  if (d > 0) {
    std::vector<IntVec> cols;
    for (const auto& g : generators) cols.push_back(lattice_coordinates(lattice, g));
    const RatMatrix u_inv = inverse(columns_rational(cols, d));
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> row(d);
      for (int j = 0; j < d; ++j) row[j] = u_inv(i, j);
      hs.push_back(std::move(row));
    }
  }
  auto form = ambient_form(lattice, hs);
  equations = std::move(form.equations);
  coordinate_forms = std::move(form.functionals);
}

bool HalfOpenSimplicialCone::contains(const IntVec& x) const {
  if (coordinate_forms.size() != generators.size() || (generators.empty() && equations.empty())) {
    HalfOpenSimplicialCone copy = *this;
    copy.prepare();
    return copy.contains(x);
  }
  // the lattice is saturated, so span membership already gives integrality
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (size_t i = 0; i < coordinate_forms.size(); ++i) {
    const long long mu = dot(coordinate_forms[i], x);
    if (mu < 0 || (open[i] && mu == 0)) return false;
  }
  return true;
}

KRational HalfOpenSimplicialCone::hilbert_series() const {
  LaurentPoly num(lattice.rows);
  for (const auto& p : parallelepiped_points()) num.add_term(p, 1);
  return KRational(std::move(num), generators);
}

std::vector<HalfOpenSimplicialCone> triangulate(const RationalCone& c) {
  if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "cone contains a line");
  const int d = c.dimension();
  const IntMatrix& basis = c.lattice_basis();
  if (d == 0) {
    HalfOpenSimplicialCone apex;
    apex.lattice = basis;
    apex.prepare();
    return {apex};
  }

  const auto& rays = c.extreme_rays();
  const int m = static_cast<int>(rays.size());
  std::vector<IntVec> y;
  for (const auto& r : rays) y.push_back(c.coordinates(r).value());

  // initial full-dimensional simplex, greedy in ray order
  std::vector<int> first;
  std::vector<IntVec> chosen;
  for (int i = 0; i < m && static_cast<int>(first.size()) < d; ++i) {
    chosen.push_back(y[i]);
    if (rank_of(chosen, d) == static_cast<int>(chosen.size())) {
      first.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  std::vector<std::vector<int>> simplices{first};

  // boundary facets: sorted index tuple -> inward normal
  std::map<std::vector<int>, IntVec> boundary;
  auto facet_normal = [&](const std::vector<int>& facet, int opposite) {
    std::vector<const IntVec*> rows;
    for (int i : facet) rows.push_back(&y[i]);
    IntVec h = d == 1 ? IntVec{1} : hyperplane_normal(rows, d);
    if (dot(h, y[opposite]) < 0) h = -h;
    return h;
  };
  auto toggle = [&](std::vector<int> facet, int opposite) {
    std::sort(facet.begin(), facet.end());
    auto it = boundary.find(facet);
    if (it != boundary.end()) {
      boundary.erase(it);
    } else {
      boundary.emplace(facet, facet_normal(facet, opposite));
    }
  };
  for (int skip = 0; skip < d; ++skip) {
    std::vector<int> f;
    for (int k = 0; k < d; ++k)
      if (k != skip) f.push_back(first[k]);
    toggle(f, first[skip]);
  }
  for (int r = 0; r < m; ++r) {
    if (std::find(first.begin(), first.end(), r) != first.end()) continue;
    std::vector<std::vector<int>> visible;
    for (const auto& [facet, h] : boundary)
      if (dot(h, y[r]) < 0) visible.push_back(facet);
    for (const auto& facet : visible) {
      boundary.erase(facet);
      std::vector<int> simplex = facet;
      simplex.push_back(r);
      simplices.push_back(simplex);
    }
    for (const auto& facet : visible) {
      for (std::size_t drop = 0; drop < facet.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t k = 0; k < facet.size(); ++k)
          if (k != drop) f.push_back(facet[k]);
        f.push_back(r);
        toggle(f, facet[drop]);
      }
    }
  }

  // generic interior point: q = sum p^{m-1-k} y_k with every barycentric coordinate nonzero
  std::vector<RatMatrix> inverses;
  for (const auto& s : simplices) {
    std::vector<IntVec> cols;
    for (int i : s) cols.push_back(y[i]);
    inverses.push_back(inverse(columns_rational(cols, d)));
  }
  const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (long long p : primes) {
    std::vector<Rational> q(d, 0);
    Integer w = 1;
    for (int k = m - 1; k >= 0; --k) {
      for (int i = 0; i < d; ++i) q[i] += w * y[k][i];
      w *= p;
    }
    std::vector<HalfOpenSimplicialCone> pieces;
    bool generic = true;
    for (std::size_t s = 0; s < simplices.size() && generic; ++s) {
      HalfOpenSimplicialCone piece;
      piece.lattice = basis;
      for (int i : simplices[s]) piece.generators.push_back(rays[i]);
      for (int i = 0; i < d; ++i) {
        Rational lambda = 0;
        for (int j = 0; j < d; ++j) lambda += inverses[s](i, j) * q[j];
        if (lambda == 0) {
          generic = false;
          break;
        }
        piece.open.push_back(lambda < 0);
      }
      pieces.push_back(std::move(piece));
    }
    if (generic) {
      for (auto& p : pieces) p.prepare();
      return pieces;
    }
  }
  throw Error(ErrorKind::NotPointed, "no generic interior vector found");
}

KRational hilbert_series(const RationalCone& c) {
  std::vector<KRational> parts;
  for (const auto& piece : triangulate(c)) parts.push_back(piece.hilbert_series());
  return kr_reduce(kr_sum(parts, c.ambient_dim()));
}

LaurentPoly hilbert_numerator(const RationalCone& c, const std::vector<IntVec>& denom) {
  return clear_denominator(hilbert_series(c), denom);
}

}  // namespace flagtutte
