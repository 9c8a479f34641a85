#include "semidet/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "semidet/errors.hpp"
#include "semidet/semigroup.hpp"

namespace semidet {

bool EnumerationFilter::passes(const CayleyTable& S) const {
  if (require_zero && !S.zero()) return false;
  if (require_singleton_rich && !try_star_plus(S)) return false;
  if (require_not_ecom && is_ecom(S).ecom) return false;
  if (require_unital && !algebra_has_identity(S).unital) return false;
  return true;
}

namespace {

constexpr std::int8_t kUnset = -1;

/// Partial table with incremental associativity checks around the last filled cell.
class PartialTable {
 public:
  explicit PartialTable(std::size_t n) : n_(n), cells_(n * n, kUnset) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t cells() const noexcept { return cells_.size(); }
  std::int8_t get(std::size_t a, std::size_t b) const noexcept { return cells_[a * n_ + b]; }
  void set(std::size_t k, std::int8_t v) noexcept { cells_[k] = v; }
  void unset(std::size_t k) noexcept { cells_[k] = kUnset; }

  // Re-checks every fully defined triple whose evaluation uses cell k.
  bool consistent(std::size_t k) const noexcept {
    const std::size_t a = k / n_;
    const std::size_t b = k % n_;
    const std::int8_t v = cells_[k];
    for (std::size_t z = 0; z < n_; ++z) {
      // (a b) z vs a (b z)
      const std::int8_t bz = get(b, z);
      const std::int8_t lhs = get(v, z);
      if (bz >= 0 && lhs >= 0) {
        const std::int8_t rhs = get(a, bz);
        if (rhs >= 0 && rhs != lhs) return false;
      }
    }
    for (std::size_t x = 0; x < n_; ++x) {
      // (x a) b vs x (a b)
      const std::int8_t xa = get(x, a);
      const std::int8_t rhs = get(x, v);
      if (xa >= 0 && rhs >= 0) {
        const std::int8_t lhs = get(xa, b);
        if (lhs >= 0 && lhs != rhs) return false;
      }
    }
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        // (x y) b with xy = a: equals v; compare with x (y b)
        if (get(x, y) == static_cast<std::int8_t>(a)) {
          const std::int8_t yb = get(y, b);
          if (yb >= 0) {
            const std::int8_t rhs = get(x, yb);
            if (rhs >= 0 && rhs != v) return false;
          }
        }
        // a (x y) with xy = b: equals v; compare with (a x) y
        if (get(x, y) == static_cast<std::int8_t>(b)) {
          const std::int8_t ax = get(a, x);
          if (ax >= 0) {
            const std::int8_t lhs = get(ax, y);
            if (lhs >= 0 && lhs != v) return false;
          }
        }
      }
    return true;
  }

  std::vector<std::uint8_t> flat() const {
    return std::vector<std::uint8_t>(cells_.begin(), cells_.end());
  }

 private:
  std::size_t n_;
  std::vector<std::int8_t> cells_;
};

template <typename Visit>
void search(PartialTable& t, std::size_t k, Visit& visit) {
  if (k == t.cells()) {
    visit(t);
    return;
  }
  for (std::size_t v = 0; v < t.size(); ++v) {
    t.set(k, static_cast<std::int8_t>(v));
    if (t.consistent(k)) search(t, k + 1, visit);
  }
  t.unset(k);
}

// Subtrees fixed by the first `depth` cells, in lexicographic order.
std::vector<std::vector<std::uint8_t>> prefixes(std::size_t n, std::size_t depth) {
  std::vector<std::vector<std::uint8_t>> out;
  PartialTable t(n);
  std::vector<std::uint8_t> cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == depth) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      t.set(k, static_cast<std::int8_t>(v));
      if (t.consistent(k)) {
        cur.push_back(static_cast<std::uint8_t>(v));
        self(self, k + 1);
        cur.pop_back();
      }
    }
    t.unset(k);
  };
  rec(rec, 0);
  return out;
}

template <typename Visit>
void search_prefix(std::size_t n, const std::vector<std::uint8_t>& prefix, Visit& visit) {
  PartialTable t(n);
  for (std::size_t k = 0; k < prefix.size(); ++k) t.set(k, static_cast<std::int8_t>(prefix[k]));
  search(t, prefix.size(), visit);
}

void check_order(std::size_t n) {
  if (n == 0) throw OrderTooLarge("order must be positive");
  if (n > kExhaustiveCap)
    throw OrderTooLarge("exhaustive enumeration is capped at order " +
                        std::to_string(kExhaustiveCap));
}

}  // namespace

void enumerate(std::size_t n, const EnumerationFilter& filter,
               const std::function<void(const CayleyTable&)>& visit) {
  check_order(n);
  PartialTable t(n);
  auto on_leaf = [&](const PartialTable& full) {
    CayleyTable S = CayleyTable::from_flat_unchecked(n, full.flat());
    if (filter.passes(S)) visit(S);
  };
  search(t, 0, on_leaf);
}

std::vector<CayleyTable> enumerate_all(std::size_t n, const EnumerationFilter& filter) {
  std::vector<CayleyTable> out;
  enumerate(n, filter, [&](const CayleyTable& S) { out.push_back(S); });
  return out;
}

std::uint64_t count_semigroups(std::size_t n) {
  check_order(n);
  std::uint64_t count = 0;
  PartialTable t(n);
  auto on_leaf = [&](const PartialTable&) { ++count; };
  search(t, 0, on_leaf);
  return count;
}

std::vector<std::uint8_t> canonical_form(const CayleyTable& S) {
  const std::size_t n = S.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cand(n * n);
  do {
    // Relabel element i as perm[i].
    for (bool transpose : {false, true}) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const ElementId p = transpose ? S(b, a) : S(a, b);
          cand[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[p]);
        }
      if (best.empty() || cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t count_up_to_iso_anti(std::size_t n) {
  std::set<std::vector<std::uint8_t>> classes;
  enumerate(n, {}, [&](const CayleyTable& S) { classes.insert(canonical_form(S)); });
  return classes.size();
}

CayleyTable random_semigroup(std::size_t n, std::mt19937_64& rng) {
  if (n == 0 || n > CayleyTable::kMaxOrder) throw OrderTooLarge("invalid sampling order");
  // Dead ends deep in the tree are common; restarting early is far cheaper than
  // exhausting them.
  const std::size_t kNodeBudget = 4 * n * n;
  for (;;) {
    PartialTable t(n);
    std::vector<std::vector<std::uint8_t>> order(n * n);
    std::size_t nodes = 0;
    bool found = false;
    auto rec = [&](auto&& self, std::size_t k) -> bool {
      if (k == t.cells()) return true;
      if (++nodes > kNodeBudget) return false;
      auto& values = order[k];
      values.resize(n);
      std::iota(values.begin(), values.end(), std::uint8_t{0});
      std::shuffle(values.begin(), values.end(), rng);
      for (std::uint8_t v : values) {
        t.set(k, static_cast<std::int8_t>(v));
        if (t.consistent(k) && self(self, k + 1)) return true;
        if (nodes > kNodeBudget) return false;
      }
      t.unset(k);
      return false;
    };
    found = rec(rec, 0);
    if (found) return CayleyTable::from_flat_unchecked(n, t.flat());
  }
}

void ConjectureReport::merge(const ConjectureReport& other) {
  tables_scanned += other.tables_scanned;
  tables_passing_filters += other.tables_passing_filters;
  pseudo_ll_transitive_count += other.pseudo_ll_transitive_count;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  singleton_rich_count += other.singleton_rich_count;
  singleton_rich_pseudo_count += other.singleton_rich_pseudo_count;
  cyclic_ll_count += other.cyclic_ll_count;
}

namespace {

void tally(const CayleyTable& S, ConjectureReport& report) {
  ++report.tables_scanned;
  auto sp = try_star_plus(S);
  if (!sp) return;
  std::optional<OrderedSemigroup> os;
  try {
    os.emplace(S, std::move(*sp));
  } catch (const CyclicLL&) {
    ++report.cyclic_ll_count;
    return;
  }
  ++report.singleton_rich_count;
  const SmoothnessReport r = is_pseudo_ll_transitive(*os);
  if (r.pseudo_ll_transitive) ++report.singleton_rich_pseudo_count;
  if (!algebra_has_identity(S).unital) return;
  ++report.tables_passing_filters;
  if (r.pseudo_ll_transitive)
    ++report.pseudo_ll_transitive_count;
  else
    report.counterexamples.push_back({S, *r.pseudo_counterexample});
}

}  // namespace

ConjectureReport verify_conjecture(std::size_t n, const ConjectureOptions& options) {
  ConjectureReport report;
  report.order = n;
  if (options.samples > 0 || n > kExhaustiveCap) {
    report.exhaustive = false;
    report.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) tally(random_semigroup(n, rng), report);
    return report;
  }

  check_order(n);
  const auto subtrees = prefixes(n, std::min<std::size_t>(2, n * n));
  std::vector<ConjectureReport> partial(subtrees.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < subtrees.size(); i = next++) {
      auto on_leaf = [&](const PartialTable& full) {
        tally(CayleyTable::from_flat_unchecked(n, full.flat()), partial[i]);
      };
      search_prefix(n, subtrees[i], on_leaf);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& p : partial) report.merge(p);
  return report;
}

}  // namespace semidet
