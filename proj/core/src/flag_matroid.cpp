#include "flagtutte/flag_matroid.hpp"

#include <algorithm>
#include <numeric>

#include "flagtutte/error.hpp"

namespace flagtutte {

std::optional<std::pair<Subset, Subset>> quotient_violation(const Matroid& n, const Matroid& m) {
  if (n.size() != m.size())
    throw Error(ErrorKind::MismatchedGroundSets, "quotient test needs a common ground set");
  // Telescoping along a maximal chain reduces the nested-pair condition to single steps.
  const Subset total = Subset{1} << m.size();
  for (Subset x = 0; x < total; ++x)
    for (int i = 0; i < m.size(); ++i) {
      if (contains(x, i)) continue;
      const Subset y = x | singleton(i);
      if (m.rank(y) - m.rank(x) < n.rank(y) - n.rank(x)) return std::make_pair(x, y);
    }
  return std::nullopt;
}

bool is_quotient(const Matroid& n, const Matroid& m) { return !quotient_violation(n, m); }

bool is_quotient_exhaustive(const Matroid& n, const Matroid& m) {
  if (n.size() != m.size())
    throw Error(ErrorKind::MismatchedGroundSets, "quotient test needs a common ground set");
  const Subset universe = full_set(m.size());
  bool ok = true;
  for (Subset x = 0; x <= universe && ok; ++x)
    for_each_subset(universe & ~x, [&](Subset extra) {
      const Subset y = x | extra;
      if (m.rank(y) - m.rank(x) < n.rank(y) - n.rank(x)) ok = false;
    });
  return ok;
}

IntVec Flag::multiplicity(int n) const {
  IntVec e(n, 0);
  for (Subset s : sets)
    for (int i : elements(s)) ++e[i];
  return e;
}

FlagMatroid FlagMatroid::from_constituents(std::vector<Matroid> constituents) {
  if (constituents.empty()) throw Error(ErrorKind::MalformedInput, "flag matroid needs constituents");
  const int n = constituents.front().size();
  std::vector<int> ranks;
  for (const auto& m : constituents) {
    if (m.size() != n)
      throw Error(ErrorKind::MismatchedGroundSets, "constituents on different ground sets");
    ranks.push_back(m.rank());
  }
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] < ranks[i - 1])
      throw Error(ErrorKind::NotConcordant,
                  "ranks must be nondecreasing (constituents " + std::to_string(i - 1) + ", " +
                      std::to_string(i) + ")");
  for (std::size_t i = 0; i < constituents.size(); ++i)
    for (std::size_t j = i + 1; j < constituents.size(); ++j)
      if (auto w = quotient_violation(constituents[i], constituents[j]))
        throw Error(ErrorKind::NotConcordant,
                    "constituent " + std::to_string(i) + " is not a quotient of " +
                        std::to_string(j) + ": X=" + subset_string(w->first) +
                        ", Y=" + subset_string(w->second));
  return FlagMatroid(n, std::move(ranks), std::move(constituents));
}

int FlagMatroid::total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), 0); }

std::vector<Flag> FlagMatroid::flags() const {
  std::vector<Flag> out;
  Flag cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == constituents_.size()) {
      out.push_back(cur);
      return;
    }
    const Subset prev = i == 0 ? 0 : cur.sets.back();
    for (Subset b : constituents_[i].bases()) {
      if ((prev & ~b) != 0) continue;
      cur.sets.push_back(b);
      self(self, i + 1);
      cur.sets.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool FlagMatroid::is_flag(const Flag& f) const {
  if (f.sets.size() != constituents_.size()) return false;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (!constituents_[i].is_basis(f.sets[i])) return false;
    if (i > 0 && (f.sets[i - 1] & ~f.sets[i]) != 0) return false;
  }
  return true;
}

bool flag_gale_leq(const Flag& f, const Flag& g, const Ordering& omega) {
  if (f.sets.size() != g.sets.size()) return false;
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    if (!gale_leq(f.sets[i], g.sets[i], omega)) return false;
  return true;
}

Verdict flag_check_gale(int n, const std::vector<int>& ranks, const std::vector<Flag>& flags) {
  Verdict v;
  if (flags.empty()) {
    v.ok = false;
    v.axiom = "nonempty";
    v.message = "empty flag family";
    return v;
  }
  for (const auto& f : flags) {
    bool shape = f.sets.size() == ranks.size();
    for (std::size_t i = 0; shape && i < ranks.size(); ++i)
      shape = size_of(f.sets[i]) == ranks[i] && (i == 0 || (f.sets[i - 1] & ~f.sets[i]) == 0);
    if (!shape) {
      v.ok = false;
      v.axiom = "shape";
      v.message = "member is not a chain of the given ranks";
      return v;
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Ordering omega(perm);
    bool found = false;
    for (const auto& cand : flags) {
      bool top = std::all_of(flags.begin(), flags.end(),
                             [&](const Flag& other) { return flag_gale_leq(other, cand, omega); });
      if (top) {
        found = true;
        break;
      }
    }
    if (!found) {
      v.ok = false;
      v.axiom = "gale";
      std::string order;
      for (int e : perm) order += (order.empty() ? "" : "<") + std::to_string(e);
      v.message = "no unique Gale-maximal flag for ordering " + order;
      return v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

FlagMatroid flag_from_subspace_flag(const std::vector<RatMatrix>& spaces) {
  std::vector<Matroid> constituents;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (i > 0) {
      const auto& a = spaces[i - 1];
      const auto& b = spaces[i];
      if (a.cols != b.cols) throw Error(ErrorKind::DimensionMismatch, "spaces differ in dimension");
      RatMatrix stacked(a.rows + b.rows, a.cols);
      for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) stacked(r, c) = a(r, c);
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) stacked(a.rows + r, c) = b(r, c);
      if (rank(stacked) != rank(b))
        throw Error(ErrorKind::NotNested,
                    "space " + std::to_string(i - 1) + " is not contained in space " +
                        std::to_string(i));
    }
    constituents.push_back(matroid_from_matrix(spaces[i]));
  }
  return FlagMatroid::from_constituents(std::move(constituents));
}

FlagMatroid flag_from_matrix_prefixes(const RatMatrix& a, const std::vector<int>& ranks) {
  std::vector<RatMatrix> spaces;
  for (int k : ranks) {
    if (k < 0 || k > a.rows) throw Error(ErrorKind::OutOfRange, "prefix longer than the matrix");
    RatMatrix s(k, a.cols);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < a.cols; ++c) s(r, c) = a(r, c);
    spaces.push_back(std::move(s));
  }
  return flag_from_subspace_flag(spaces);
}

Polymatroid polymatroid_of_flag(const FlagMatroid& f) {
  const int n = f.size();
  std::vector<int> table(Subset{1} << n, 0);
  for (Subset x = 0; x < table.size(); ++x)
    for (const auto& m : f.constituents()) table[x] += m.rank(x);
  return Polymatroid::from_rank(n, std::move(table));
}

}  // namespace flagtutte
