#include "flagtutte/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

constexpr int kMaxOrderingScan = 9;

IntVec homogenize(const IntVec& v, long long k) {
  IntVec h = v;
  h.push_back(k);
  return h;
}

IntVec scale(const IntVec& v, long long k) {
  IntVec out = v;
  for (auto& x : out) x *= k;
  return out;
}

// DFS over the lattice points of {x(S) <= z(S), x(E) = z(E)}.
template <class F>
void for_each_described_point(const std::vector<long long>& z, int n, F&& visit) {
  const Subset universe = full_set(n);
  const long long total = z[universe];
  if (n == 0) {
    if (total == 0) visit(IntVec{});
    return;
  }
  IntVec x(n, 0);
  std::vector<long long> sums(Subset{1} << n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(x);
      return;
    }
    const Subset prefix = full_set(i);
    const long long lo = total - z[universe & ~singleton(i)];
    const long long hi = z[singleton(i)];
    for (long long v = lo; v <= hi; ++v) {
      bool upper_ok = true, lower_ok = true;
      for_each_subset(prefix, [&](Subset s) {
        const Subset t = s | singleton(i);
        const long long val = sums[s] + v;
        sums[t] = val;
        if (val > z[t]) upper_ok = false;
        if (t != universe && val < total - z[universe & ~t]) lower_ok = false;
        if (t == universe && val < total) lower_ok = false;
      });
      if (!upper_ok) break;
      if (!lower_ok) continue;
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<long long> scaled_z(const std::vector<long long>& z, long long k) {
  std::vector<long long> out = z;
  for (auto& v : out) v *= k;
  return out;
}

bool described_contains(const SubmodularDescription& d, const IntVec& x, long long k) {
  const Subset universe = full_set(d.n);
  std::vector<long long> sums(Subset{1} << d.n, 0);
  for (Subset s = 1; s <= universe; ++s) {
    const int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + x[low];
    if (sums[s] > k * d.z[s]) return false;
  }
  return sums[universe] == k * d.z[universe];
}

IntVec greedy_vertex(const SubmodularDescription& d, const std::vector<int>& perm) {
  IntVec x(d.n, 0);
  Subset s = 0;
  for (int e : perm) {
    const long long before = d.z[s];
    s |= singleton(e);
    x[e] = d.z[s] - before;
  }
  return x;
}

// Tight-set rank test for the face spanned by two points.
bool spans_edge(const SubmodularDescription& d, const IntVec& v, const IntVec& w) {
  const Subset universe = full_set(d.n);
  std::vector<long long> sv(Subset{1} << d.n, 0), sw(Subset{1} << d.n, 0);
  RankAccumulator acc(d.n);
  for (Subset s = 1; s <= universe; ++s) {
    const int low = std::countr_zero(s);
    sv[s] = sv[s & (s - 1)] + v[low];
    sw[s] = sw[s & (s - 1)] + w[low];
    if (sv[s] == d.z[s] && sw[s] == d.z[s]) {
      IntVec ind(d.n, 0);
      for (int e : elements(s)) ind[e] = 1;
      acc.add(std::move(ind));
      if (acc.rank() == d.n - 1 && s == universe) break;
    }
  }
  return acc.rank() == d.n - 1;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(std::vector<IntVec> points, int n) {
  if (points.empty()) throw Error(ErrorKind::MalformedInput, "polytope needs at least one point");
  std::vector<IntVec> homog;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw Error(ErrorKind::DimensionMismatch, "point length");
    homog.push_back(homogenize(p, 1));
  }
  std::sort(homog.begin(), homog.end());
  homog.erase(std::unique(homog.begin(), homog.end()), homog.end());
  LatticePolytope out;
  out.n_ = n;
  out.hull_ = std::make_shared<const RationalCone>(homog, n + 1);
  for (const auto& r : out.hull_->extreme_rays()) out.vertices_.emplace_back(r.begin(), r.end() - 1);
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

LatticePolytope LatticePolytope::from_description(SubmodularDescription desc) {
  if (desc.n > kMaxOrderingScan)
    throw Error(ErrorKind::TooLarge, "vertex enumeration over orderings limited to n <= 9");
  std::vector<int> perm(desc.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<IntVec> verts;
  do verts.insert(greedy_vertex(desc, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return from_description(std::move(desc), std::vector<IntVec>(verts.begin(), verts.end()));
}

LatticePolytope LatticePolytope::from_description(SubmodularDescription desc,
                                                  std::vector<IntVec> vertices) {
  if (desc.z.size() != (std::size_t{1} << desc.n))
    throw Error(ErrorKind::MalformedInput, "description must have 2^n entries");
  LatticePolytope out;
  out.n_ = desc.n;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  out.vertices_ = std::move(vertices);
  out.desc_ = std::move(desc);
  return out;
}

int LatticePolytope::dimension() const {
  std::vector<IntVec> diffs;
  for (const auto& v : vertices_) diffs.push_back(v - vertices_.front());
  RatMatrix a(static_cast<int>(diffs.size()), n_);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < n_; ++j) a(i, j) = diffs[i][j];
  return rank(a);
}

int LatticePolytope::vertex_index(const IntVec& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

bool LatticePolytope::contains_scaled(const IntVec& x, long long k) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "point length");
  if (desc_) return described_contains(*desc_, x, k);
  if (k == 0) return is_zero(x);
  return hull_->contains(homogenize(x, k));
}

LatticePolytope LatticePolytope::translated(const IntVec& shift) const {
  std::vector<IntVec> verts;
  for (const auto& v : vertices_) verts.push_back(v + shift);
  if (!desc_) return from_points(std::move(verts), n_);
  SubmodularDescription d = *desc_;
  for (Subset s = 1; s < d.z.size(); ++s)
    for (int e : elements(s)) d.z[s] += shift[e];
  return from_description(std::move(d), std::move(verts));
}

LatticePolytope LatticePolytope::scaled(long long k) const {
  std::vector<IntVec> verts;
  for (const auto& v : vertices_) verts.push_back(scale(v, k));
  if (!desc_) return from_points(std::move(verts), n_);
  return from_description(SubmodularDescription{n_, scaled_z(desc_->z, k)}, std::move(verts));
}

LatticePolytope base_polytope(const Matroid& m) {
  std::vector<IntVec> verts;
  for (Subset b : m.bases()) {
    IntVec v(m.size(), 0);
    for (int e : elements(b)) v[e] = 1;
    verts.push_back(std::move(v));
  }
  const auto& table = m.rank_table();
  return LatticePolytope::from_description(
      SubmodularDescription{m.size(), std::vector<long long>(table.begin(), table.end())},
      std::move(verts));
}

LatticePolytope poly_base_polytope(const Polymatroid& p) {
  const auto& table = p.table();
  return LatticePolytope::from_description(
      SubmodularDescription{p.size(), std::vector<long long>(table.begin(), table.end())});
}

LatticePolytope flag_polytope(const FlagMatroid& f) {
  std::vector<IntVec> verts;
  for (const auto& fl : f.flags()) verts.push_back(fl.multiplicity(f.size()));
  std::vector<long long> z(Subset{1} << f.size(), 0);
  for (Subset s = 0; s < z.size(); ++s)
    for (const auto& m : f.constituents()) z[s] += m.rank(s);
  return LatticePolytope::from_description(SubmodularDescription{f.size(), std::move(z)},
                                           std::move(verts));
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
  std::vector<IntVec> out;
  if (p.description()) {
    for_each_described_point(p.description()->z, p.ambient_dim(),
                             [&](const IntVec& x) { out.push_back(x); });
  } else {
    const int n = p.ambient_dim();
    IntVec lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices())
      for (int i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    IntVec x = lo;
    while (true) {
      if (p.contains(x)) out.push_back(x);
      int pos = n - 1;
      while (pos >= 0 && ++x[pos] > hi[pos]) x[pos] = lo[pos], --pos;
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> adjacent_vertices(const LatticePolytope& p, int vertex) {
  const auto& verts = p.vertices();
  std::vector<int> out;
  if (p.description()) {
    for (int w = 0; w < static_cast<int>(verts.size()); ++w)
      if (w != vertex && spans_edge(*p.description(), verts[vertex], verts[w])) out.push_back(w);
    return out;
  }
  // homogenised cone: the face through both rays is 2-dimensional
  RationalCone hull(
      [&] {
        std::vector<IntVec> h;
        for (const auto& v : verts) h.push_back(homogenize(v, 1));
        return h;
      }(),
      p.ambient_dim() + 1);
  const int d = hull.dimension();
  const IntVec yv = hull.coordinates(homogenize(verts[vertex], 1)).value();
  for (int w = 0; w < static_cast<int>(verts.size()); ++w) {
    if (w == vertex) continue;
    const IntVec yw = hull.coordinates(homogenize(verts[w], 1)).value();
    std::vector<IntVec> tight;
    for (const auto& h : hull.facet_normals())
      if (dot(h, yv) == 0 && dot(h, yw) == 0) tight.push_back(h);
    RatMatrix a(static_cast<int>(tight.size()), d);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = tight[i][j];
    if (rank(a) == d - 2) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<int, int>> edges(const LatticePolytope& p) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    for (int w : adjacent_vertices(p, v))
      if (v < w) out.emplace_back(v, w);
  return out;
}

Verdict edge_direction_check(const LatticePolytope& p,
                             const std::optional<std::vector<int>>& flag_ranks) {
  Verdict verdict;
  const auto& verts = p.vertices();
  for (auto [a, b] : edges(p)) {
    IntVec d = verts[b] - verts[a];
    int pos = 0, neg = 0;
    long long mag = 0;
    bool ok = true;
    for (long long x : d) {
      if (x == 0) continue;
      if (mag == 0) mag = x < 0 ? -x : x;
      ok = ok && (x == mag || x == -mag);
      (x > 0 ? pos : neg)++;
    }
    if (!ok || pos != 1 || neg != 1) {
      verdict.ok = false;
      verdict.axiom = "edge";
      verdict.message = "edge " + to_string(verts[a]) + " -- " + to_string(verts[b]) +
                        " has direction " + to_string(d);
      return verdict;
    }
  }
  if (flag_ranks) {
    const long long s = static_cast<long long>(flag_ranks->size());
    for (const auto& v : verts) {
      bool ok = std::all_of(v.begin(), v.end(), [&](long long x) { return x >= 0 && x <= s; });
      for (long long i = 1; ok && i <= s; ++i) {
        const long long count = std::count_if(v.begin(), v.end(), [&](long long x) { return x >= s - i + 1; });
        ok = count == (*flag_ranks)[i - 1];
      }
      if (!ok) {
        verdict.ok = false;
        verdict.axiom = "rank-vector";
        verdict.message = "vertex " + to_string(v) + " is not a rank vector";
        return verdict;
      }
    }
  }
  return verdict;
}

RationalCone cone_at_vertex(const LatticePolytope& p, const IntVec& v) {
  const int idx = p.vertex_index(v);
  if (idx < 0) throw Error(ErrorKind::NotAVertex, to_string(v) + " is not a vertex");
  std::vector<IntVec> gens;
  for (const auto& u : p.vertices())
    if (u != v) gens.push_back(u - v);
  if (!p.description()) return RationalCone(std::move(gens), p.ambient_dim());
  std::vector<IntVec> rays;
  for (int w : adjacent_vertices(p, idx)) rays.push_back(primitive(p.vertices()[w] - v));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.empty()) return RationalCone({}, p.ambient_dim());
  return RationalCone::from_extreme_rays(std::move(rays), p.ambient_dim(), std::move(gens));
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) throw Error(ErrorKind::MalformedInput, "empty Minkowski sum");
  const int n = ps.front().ambient_dim();
  for (const auto& p : ps)
    if (p.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "summands in different spaces");
  const bool described = std::all_of(ps.begin(), ps.end(), [](const auto& p) { return p.description().has_value(); });
  if (described) {
    std::vector<long long> z(Subset{1} << n, 0);
    for (const auto& p : ps)
      for (std::size_t s = 0; s < z.size(); ++s) z[s] += p.description()->z[s];
    return LatticePolytope::from_description(SubmodularDescription{n, std::move(z)});
  }
  std::vector<IntVec> sums{IntVec(n, 0)};
  for (const auto& p : ps) {
    std::vector<IntVec> next;
    for (const auto& s : sums)
      for (const auto& v : p.vertices()) next.push_back(s + v);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return LatticePolytope::from_points(std::move(sums), n);
}

std::optional<std::vector<IntVec>> decompose_lattice_point(const IntVec& p,
                                                           const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) return std::nullopt;
  const int n = ps.front().ambient_dim();
  const std::size_t k = ps.size();
  // suffix sums of descriptions let us prune with an exact real-membership test
  std::vector<std::optional<SubmodularDescription>> rest(k + 1);
  rest[k] = SubmodularDescription{n, std::vector<long long>(Subset{1} << n, 0)};
  for (std::size_t i = k; i-- > 0;) {
    if (!rest[i + 1] || !ps[i].description()) break;
    SubmodularDescription d = *rest[i + 1];
    for (std::size_t s = 0; s < d.z.size(); ++s) d.z[s] += ps[i].description()->z[s];
    rest[i] = std::move(d);
  }
  std::vector<std::vector<IntVec>> points(k);
  for (std::size_t i = 0; i < k; ++i) points[i] = lattice_points(ps[i]);

  std::vector<IntVec> chosen;
  auto rec = [&](auto&& self, std::size_t i, const IntVec& remaining) -> bool {
    if (i + 1 == k) {
      if (std::binary_search(points[i].begin(), points[i].end(), remaining)) {
        chosen.push_back(remaining);
        return true;
      }
      return false;
    }
    for (const auto& s : points[i]) {
      IntVec next = remaining - s;
      if (rest[i + 1] && !described_contains(*rest[i + 1], next, 1)) continue;
      chosen.push_back(s);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rest[0] && !described_contains(*rest[0], p, 1)) return std::nullopt;
  if (!rec(rec, 0, p)) return std::nullopt;
  return chosen;
}

NormalityVerdict is_normal(const LatticePolytope& p, int kmax) {
  NormalityVerdict verdict;
  const LatticePolytope base = p.translated(-p.vertices().front());
  for (long long k = 2; k <= kmax; ++k) {
    const LatticePolytope dilate = base.scaled(k);
    std::vector<LatticePolytope> copies(k, base);
    for (const auto& x : lattice_points(dilate)) {
      if (!decompose_lattice_point(x, copies)) {
        verdict.ok = false;
        verdict.k = k;
        verdict.witness = x;
        return verdict;
      }
    }
  }
  return verdict;
}

Integer count_shifted(const LatticePolytope& p, long long u, long long t) {
  if (u < 0 || t < 0) throw Error(ErrorKind::NegativeShift, "shifts must be nonnegative");
  if (!p.description())
    throw Error(ErrorKind::MalformedInput, "shifted counts need a submodular description");
  const int n = p.ambient_dim();
  const Subset universe = full_set(n);
  std::vector<long long> z = p.description()->z;
  for (Subset s = 1; s < universe; ++s) z[s] += u;
  if (n > 0) z[universe] += u - t;
  Integer count = 0;
  for_each_described_point(z, n, [&](const IntVec&) { ++count; });
  return count;
}

}  // namespace flagtutte
