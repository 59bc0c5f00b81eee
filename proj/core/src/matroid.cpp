#include "flagtutte/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

constexpr int kMaxMatroidSize = 20;

Subset drop_element(Subset s, int e) {
  const Subset low = s & ((Subset{1} << e) - 1);
  const Subset high = (s >> (e + 1)) << e;
  return low | high;
}

void sort_canonical(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), element_lex_less);
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Ordering::Ordering(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int e = order_[i];
    if (e < 0 || e >= n || position_[e] != -1)
      throw Error(ErrorKind::MalformedInput, "ordering is not a permutation");
    position_[e] = i;
  }
}

Ordering Ordering::natural(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Ordering(std::move(v));
}

Ordering Ordering::reversed() const {
  return Ordering(std::vector<int>(order_.rbegin(), order_.rend()));
}

Matroid::Matroid(int n, int k, std::vector<Subset> bases)
    : n_(n), k_(k), bases_(std::move(bases)) {
  const Subset total = Subset{1} << n_;
  std::vector<char> indep(total, 0);
  for (Subset b : bases_) indep[b] = 1;
  for (Subset x = total; x-- > 0;) {
    if (indep[x]) continue;
    for (int i = 0; i < n_; ++i)
      if (!contains(x, i) && indep[x | singleton(i)]) {
        indep[x] = 1;
        break;
      }
  }
  rank_table_.assign(total, 0);
  for (Subset x = 1; x < total; ++x) {
    if (indep[x]) {
      rank_table_[x] = size_of(x);
      continue;
    }
    int best = 0;
    for (Subset y = x; y != 0; y &= y - 1) best = std::max(best, rank_table_[x & ~(y & -y)]);
    rank_table_[x] = best;
  }
}

Matroid Matroid::from_masks(int n, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxMatroidSize)
    throw Error(ErrorKind::TooLarge, "ground set size " + std::to_string(n) +
                                         " outside supported range 0.." +
                                         std::to_string(kMaxMatroidSize));
  if (bases.empty()) throw Error(ErrorKind::EmptyBases, "basis family is empty (B1)");
  const Subset universe = full_set(n);
  for (Subset b : bases)
    if ((b & ~universe) != 0)
      throw Error(ErrorKind::OutOfRange, "basis " + subset_string(b) + " has element >= n");
  sort_canonical(bases);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int k = size_of(bases.front());
  for (Subset b : bases)
    if (size_of(b) != k)
      throw Error(ErrorKind::UnequalCardinality,
                  "bases " + subset_string(bases.front()) + " and " + subset_string(b) +
                      " have different sizes");
  std::vector<char> member(Subset{1} << n, 0);
  for (Subset b : bases) member[b] = 1;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int e : elements(b1 & ~b2)) {
        bool found = false;
        for (int f : elements(b2 & ~b1)) {
          if (member[(b1 & ~singleton(e)) | singleton(f)]) {
            found = true;
            break;
          }
        }
        if (!found)
          throw Error(ErrorKind::ExchangeViolation,
                      "exchange fails for B1=" + subset_string(b1) + ", B2=" + subset_string(b2) +
                          ", e=" + std::to_string(e));
      }
    }
  }
  return Matroid(n, k, std::move(bases));
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    Subset s = 0;
    for (int e : b) {
      if (e < 0 || e >= n || n > kMaxMatroidSize)
        throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e) + " not in ground set");
      if (contains(s, e))
        throw Error(ErrorKind::MalformedInput, "repeated element " + std::to_string(e));
      s |= singleton(e);
    }
    masks.push_back(s);
  }
  return from_masks(n, std::move(masks));
}

Matroid Matroid::uniform(int k, int n) {
  std::vector<Subset> bases;
  for_each_k_subset(n, k, [&](Subset s) { bases.push_back(s); });
  sort_canonical(bases);
  return Matroid(n, k, std::move(bases));
}

Matroid Matroid::from_rank_table(int n, const std::vector<int>& table) {
  const int k = table[full_set(n)];
  std::vector<Subset> bases;
  for_each_k_subset(n, k, [&](Subset s) {
    if (table[s] == k) bases.push_back(s);
  });
  sort_canonical(bases);
  return Matroid(n, k, std::move(bases));
}

bool Matroid::is_basis(Subset s) const {
  return size_of(s) == k_ && rank_table_[s] == k_;
}

int Matroid::rank(Subset x) const {
  if ((x & ~full_set(n_)) != 0)
    throw Error(ErrorKind::OutOfRange, "subset " + subset_string(x) + " not in ground set");
  return rank_table_[x];
}

std::vector<std::vector<int>> bases_as_lists(const Matroid& m) {
  std::vector<std::vector<int>> out;
  for (Subset b : m.bases()) out.push_back(elements(b));
  return out;
}

Verdict check_rank_axioms(const std::vector<int>& table, int n, RankMode mode) {
  Verdict v;
  const Subset total = Subset{1} << n;
  if (table.size() != total) {
    v.ok = false;
    v.axiom = "table";
    v.message = "rank table must have 2^n entries";
    return v;
  }
  for (Subset x = 0; x < total; ++x) {
    const bool bad = mode == RankMode::Matroid ? (table[x] < 0 || table[x] > size_of(x))
                                               : (table[x] < 0 || (x == 0 && table[x] != 0));
    if (bad) {
      v.ok = false;
      v.axiom = mode == RankMode::Matroid ? "R1" : "R1'";
      v.witness = {x};
      v.message = "r(" + subset_string(x) + ") = " + std::to_string(table[x]);
      return v;
    }
  }
  for (Subset x = 0; x < total; ++x) {
    for (int i = 0; i < n; ++i) {
      if (contains(x, i)) continue;
      if (table[x] > table[x | singleton(i)]) {
        v.ok = false;
        v.axiom = "R2";
        v.witness = {x, x | singleton(i)};
        v.message = "rank decreases from " + subset_string(x) + " to " +
                    subset_string(x | singleton(i));
        return v;
      }
    }
  }
  for (Subset x = 0; x < total; ++x) {
    for (int i = 0; i < n; ++i) {
      if (contains(x, i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (contains(x, j)) continue;
        const Subset xi = x | singleton(i), xj = x | singleton(j);
        if (table[xi | xj] + table[x] > table[xi] + table[xj]) {
          v.ok = false;
          v.axiom = "R3";
          v.witness = {xi, xj};
          v.message = "submodularity fails for " + subset_string(xi) + ", " + subset_string(xj);
          return v;
        }
      }
    }
  }
  return v;
}

Matroid delete_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw Error(ErrorKind::OutOfRange, "element out of range");
  const bool coloop = m.rank(full_set(m.size()) & ~singleton(e)) < m.rank();
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (coloop) {
      bases.push_back(drop_element(b & ~singleton(e), e));
    } else if (!contains(b, e)) {
      bases.push_back(drop_element(b, e));
    }
  }
  return Matroid::from_masks(m.size() - 1, std::move(bases));
}

Matroid contract_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw Error(ErrorKind::OutOfRange, "element out of range");
  if (m.rank(singleton(e)) == 0) return delete_element(m, e);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if (contains(b, e)) bases.push_back(drop_element(b & ~singleton(e), e));
  return Matroid::from_masks(m.size() - 1, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  const Subset universe = full_set(m.size());
  for (Subset b : m.bases()) bases.push_back(universe & ~b);
  return Matroid::from_masks(m.size(), std::move(bases));
}

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  const Subset total = Subset{1} << m.size();
  for (Subset x = 1; x < total; ++x) {
    if (m.is_independent(x)) continue;
    bool minimal = true;
    for (int e : elements(x))
      if (!m.is_independent(x & ~singleton(e))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
    return element_lex_less(a, b);
  });
  return out;
}

std::vector<Subset> cocircuits(const Matroid& m) { return circuits(dual(m)); }

LoopsColoops loops_coloops(const Matroid& m) {
  LoopsColoops lc;
  Subset in_some = 0, in_all = full_set(m.size());
  for (Subset b : m.bases()) {
    in_some |= b;
    in_all &= b;
  }
  lc.loops = full_set(m.size()) & ~in_some;
  lc.coloops = in_all;
  return lc;
}

std::vector<Subset> connected_components(const Matroid& m) {
  DisjointSets ds(m.size());
  for (Subset c : circuits(m)) {
    auto el = elements(c);
    for (size_t i = 1; i < el.size(); ++i) ds.unite(el[0], el[i]);
  }
  std::vector<Subset> comp(m.size(), 0);
  for (int e = 0; e < m.size(); ++e) comp[ds.find(e)] |= singleton(e);
  std::vector<Subset> out;
  for (Subset c : comp)
    if (c != 0) out.push_back(c);
  return out;
}

bool gale_leq(Subset a, Subset b, const Ordering& omega) {
  std::vector<int> pa, pb;
  for (int e : elements(a)) pa.push_back(omega.position(e));
  for (int e : elements(b)) pb.push_back(omega.position(e));
  if (pa.size() != pb.size()) return false;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  for (size_t i = 0; i < pa.size(); ++i)
    if (pa[i] > pb[i]) return false;
  return true;
}

std::optional<Subset> gale_maximum(const std::vector<Subset>& family, const Ordering& omega) {
  if (family.empty()) return std::nullopt;
  for (Subset candidate : family) {
    bool dominates = true;
    for (Subset other : family)
      if (!gale_leq(other, candidate, omega)) {
        dominates = false;
        break;
      }
    if (dominates) return candidate;
  }
  return std::nullopt;
}

Subset gale_max(const Matroid& m, const Ordering& omega) {
  Subset chosen = 0;
  for (int i = omega.size() - 1; i >= 0; --i) {
    const int e = omega.order()[i];
    if (m.is_independent(chosen | singleton(e))) chosen |= singleton(e);
  }
  return chosen;
}

Subset gale_max_checked(const Matroid& m, const Ordering& omega) {
  const Subset a = gale_max(m, omega);
  if (!m.is_basis(a)) throw Error(ErrorKind::NotAMatroid, "greedy result is not a basis");
  for (Subset b : m.bases())
    if (!gale_leq(b, a, omega))
      throw Error(ErrorKind::NotAMatroid,
                  "basis " + subset_string(b) + " not dominated by " + subset_string(a));
  return a;
}

int union_rank(const std::vector<Matroid>& ms, Subset a) {
  if (ms.empty()) return 0;
  const int n = ms.front().size();
  for (const auto& m : ms)
    if (m.size() != n) throw Error(ErrorKind::MismatchedGroundSets, "matroids differ in size");
  if ((a & ~full_set(n)) != 0) throw Error(ErrorKind::OutOfRange, "subset not in ground set");
  int best = size_of(a);
  for_each_subset(a, [&](Subset b) {
    int v = size_of(a & ~b);
    for (const auto& m : ms) v += m.rank(b);
    best = std::min(best, v);
  });
  return best;
}

std::optional<std::vector<Subset>> cover_by_independent(const std::vector<Matroid>& ms) {
  if (ms.empty()) return std::nullopt;
  const int n = ms.front().size();
  for (const auto& m : ms)
    if (m.size() != n) throw Error(ErrorKind::MismatchedGroundSets, "matroids differ in size");
  const int k = static_cast<int>(ms.size());
  std::vector<Subset> sets(k, 0);
  std::vector<int> owner(n, -1);

  for (int x = 0; x < n; ++x) {
    // BFS over the exchange graph; parent[z] = (y, i) means y enters I_i, z leaves it.
    std::vector<std::pair<int, int>> parent(n, {-1, -1});
    std::vector<char> seen(n, 0);
    std::deque<int> queue{x};
    seen[x] = 1;
    int sink = -1, sink_set = -1;
    while (!queue.empty() && sink < 0) {
      const int y = queue.front();
      queue.pop_front();
      for (int i = 0; i < k && sink < 0; ++i) {
        if (owner[y] == i) continue;
        if (ms[i].is_independent(sets[i] | singleton(y))) {
          sink = y;
          sink_set = i;
          break;
        }
        for (int z : elements(sets[i])) {
          if (seen[z]) continue;
          if (ms[i].is_independent((sets[i] & ~singleton(z)) | singleton(y))) {
            seen[z] = 1;
            parent[z] = {y, i};
            queue.push_back(z);
          }
        }
      }
    }
    if (sink < 0) return std::nullopt;
    // walk back: sink joins sink_set, each z on the path is replaced by its parent
    int y = sink;
    int target = sink_set;
    while (true) {
      if (owner[y] >= 0) sets[owner[y]] &= ~singleton(y);
      sets[target] |= singleton(y);
      const int moved_from = owner[y];
      owner[y] = target;
      if (y == x) break;
      (void)moved_from;
      auto [prev, set_index] = parent[y];
      // prev enters set_index, which y just left
      target = set_index;
      y = prev;
    }
  }
  for (int i = 0; i < k; ++i)
    if (!ms[i].is_independent(sets[i]))
      throw Error(ErrorKind::NotAMatroid, "augmenting path produced a dependent set");
  return sets;
}

Matroid matroid_from_matrix(const RatMatrix& rows) {
  const int n = rows.cols;
  if (n > kMaxMatroidSize) throw Error(ErrorKind::TooLarge, "too many columns");
  const int r = rank(rows);
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) {
    if (column_rank(rows, elements(s)) == r) bases.push_back(s);
  });
  return Matroid::from_masks(n, std::move(bases));
}

Matroid matroid_from_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw Error(ErrorKind::OutOfRange, "edge endpoint outside vertex range");
  DisjointSets all(vertices);
  int r = 0;
  for (auto [u, v] : edges)
    if (all.unite(u, v)) ++r;
  std::vector<Subset> bases;
  for_each_k_subset(m, r, [&](Subset s) {
    DisjointSets ds(vertices);
    for (int e : elements(s))
      if (!ds.unite(edges[e].first, edges[e].second)) return;
    bases.push_back(s);
  });
  return Matroid::from_masks(m, std::move(bases));
}

}  // namespace flagtutte
