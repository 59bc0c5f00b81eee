#include "flagtutte/polymatroid.hpp"

#include <algorithm>
#include <set>

#include "flagtutte/error.hpp"

namespace flagtutte {

namespace {

constexpr int kMaxPolymatroidSize = 16;

Subset lift(Subset x, int e) {
  const Subset low = x & ((Subset{1} << e) - 1);
  const Subset high = (x >> e) << (e + 1);
  return low | high;
}

}  // namespace

Polymatroid Polymatroid::from_rank(int n, std::vector<int> table) {
  if (n < 0 || n > kMaxPolymatroidSize)
    throw Error(ErrorKind::TooLarge, "polymatroid ground set too large");
  if (table.size() != (std::size_t{1} << n))
    throw Error(ErrorKind::MalformedInput, "rank table must have 2^n entries");
  Verdict v = check_rank_axioms(table, n, RankMode::Polymatroid);
  if (!v.ok) throw Error(ErrorKind::AxiomViolation, v.axiom + ": " + v.message);
  return Polymatroid(n, std::move(table));
}

Polymatroid Polymatroid::from_matroid(const Matroid& m) {
  return Polymatroid(m.size(), m.rank_table());
}

int Polymatroid::max_singleton_rank() const {
  int best = 0;
  for (int i = 0; i < n_; ++i) best = std::max(best, table_[singleton(i)]);
  return best;
}

std::vector<IntVec> poly_bases(const Polymatroid& p) {
  const int n = p.size();
  const int total = p.rank();
  std::vector<IntVec> out;
  IntVec x(n, 0);
  // sums[S] = x(S) for S inside the assigned prefix
  std::vector<long long> sums(Subset{1} << n, 0);

  auto rec = [&](auto&& self, int i, long long assigned) -> void {
    if (i == n) {
      if (assigned == total) out.push_back(x);
      return;
    }
    const Subset prefix = full_set(i);
    const Subset rest = full_set(n) & ~full_set(i + 1);
    for (int v = 0; v <= p.rank(singleton(i)); ++v) {
      bool ok = true;
      for_each_subset(prefix, [&](Subset s) {
        if (!ok) return;
        const long long val = sums[s] + v;
        if (val > p.rank(s | singleton(i))) ok = false;
        sums[s | singleton(i)] = val;
      });
      if (!ok) break;  // larger v only makes it worse
      // the remaining coordinates can contribute at most r(rest)
      const long long now = assigned + v;
      if (now > total) break;
      if (now + p.rank(rest) < total) continue;
      x[i] = v;
      self(self, i + 1, now);
    }
    x[i] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool poly_exchange_holds(const std::vector<IntVec>& bases) {
  std::set<IntVec> members(bases.begin(), bases.end());
  for (const auto& u : bases)
    for (const auto& v : bases)
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < u.size() && !found; ++j) {
          if (u[j] >= v[j]) continue;
          IntVec w = u;
          --w[i];
          ++w[j];
          found = members.count(w) > 0;
        }
        if (!found) return false;
      }
  return true;
}

IntVec vertex_from_ordering(const Polymatroid& p, const Ordering& perm) {
  if (perm.size() != p.size())
    throw Error(ErrorKind::DimensionMismatch, "ordering size differs from ground set");
  IntVec x(p.size(), 0);
  Subset s = 0;
  for (int e : perm.order()) {
    const int before = p.rank(s);
    s |= singleton(e);
    x[e] = p.rank(s) - before;
  }
  return x;
}

Polymatroid polymatroid_from_subspaces(const std::vector<RatMatrix>& blocks) {
  const int n = static_cast<int>(blocks.size());
  if (n > kMaxPolymatroidSize) throw Error(ErrorKind::TooLarge, "too many blocks");
  const int dim = n == 0 ? 0 : blocks.front().cols;
  for (const auto& b : blocks)
    if (b.cols != dim) throw Error(ErrorKind::DimensionMismatch, "blocks live in different spaces");
  std::vector<int> table(Subset{1} << n, 0);
  for (Subset a = 1; a < (Subset{1} << n); ++a) {
    int rows = 0;
    for (int i : elements(a)) rows += blocks[i].rows;
    RatMatrix stacked(rows, dim);
    int r = 0;
    for (int i : elements(a))
      for (int k = 0; k < blocks[i].rows; ++k, ++r)
        for (int j = 0; j < dim; ++j) stacked(r, j) = blocks[i](k, j);
    table[a] = rank(stacked);
  }
  return Polymatroid::from_rank(n, std::move(table));
}

bool lifted_independent(const Polymatroid& p, int r, Subset a) {
  const int n = p.size();
  std::vector<int> count(n, 0);
  Subset support = 0;
  for (int idx : elements(a)) {
    const int i = idx / r;
    if (i >= n) throw Error(ErrorKind::OutOfRange, "lifted element out of range");
    ++count[i];
    support |= singleton(i);
  }
  bool ok = true;
  for_each_subset(support, [&](Subset b) {
    int c = 0;
    for (int i : elements(b)) c += count[i];
    if (c > p.rank(b)) ok = false;
  });
  return ok;
}

Polymatroid poly_delete(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.size()) throw Error(ErrorKind::OutOfRange, "element out of range");
  const int n = p.size() - 1;
  std::vector<int> table(Subset{1} << n);
  for (Subset x = 0; x < table.size(); ++x) table[x] = p.rank(lift(x, e));
  return Polymatroid::from_rank(n, std::move(table));
}

Polymatroid poly_contract(const Polymatroid& p, int e) {
  if (e < 0 || e >= p.size()) throw Error(ErrorKind::OutOfRange, "element out of range");
  const int n = p.size() - 1;
  std::vector<int> table(Subset{1} << n);
  for (Subset x = 0; x < table.size(); ++x)
    table[x] = p.rank(lift(x, e) | singleton(e)) - p.rank(singleton(e));
  return Polymatroid::from_rank(n, std::move(table));
}

Matroid polymatroid_to_matroid(const Polymatroid& p, int r) {
  if (r < p.max_singleton_rank())
    throw Error(ErrorKind::RankBoundTooSmall,
                "r = " + std::to_string(r) + " below max singleton rank " +
                    std::to_string(p.max_singleton_rank()));
  const int size = p.size() * r;
  if (size > 16) throw Error(ErrorKind::TooLarge, "lifted ground set exceeds 16 elements");
  std::vector<Subset> bases;
  for_each_k_subset(size, p.rank(), [&](Subset s) {
    if (lifted_independent(p, r, s)) bases.push_back(s);
  });
  return Matroid::from_masks(size, std::move(bases));
}

}  // namespace flagtutte
