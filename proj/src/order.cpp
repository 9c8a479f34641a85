#include "semidet/order.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "semidet/errors.hpp"

namespace semidet {

ElementSet Poset::down_set(ElementId s) const {
  ElementSet out;
  for (ElementId a = 0; a < leq.size(); ++a)
    if (leq(a, s)) out.push_back(a);
  return out;
}

ElementSet Poset::up_set(ElementId s) const {
  ElementSet out;
  for (ElementId a = 0; a < leq.size(); ++a)
    if (leq(s, a)) out.push_back(a);
  return out;
}

LLRelation ll_relation(const CayleyTable& S, const StarPlus& sp) {
  const std::size_t n = S.size();
  LLRelation out{BoolMatrix(n)};
  for (ElementId s = 0; s < n; ++s)
    for (ElementId t = 0; t < n; ++t)
      if (S(S(sp.plus[s], t), sp.star[s]) == s) out.rel.set(s, t);
  return out;
}

namespace {

std::vector<ElementId> find_cycle(const BoolMatrix& rel, ElementId a, ElementId b) {
  // Shortest path a -> b -> a in the relation digraph, for diagnostics.
  auto path = [&](ElementId from, ElementId to) {
    std::vector<std::ptrdiff_t> prev(rel.size(), -1);
    std::deque<ElementId> queue{from};
    prev[from] = static_cast<std::ptrdiff_t>(from);
    while (!queue.empty()) {
      ElementId x = queue.front();
      queue.pop_front();
      if (x == to) break;
      for (ElementId y = 0; y < rel.size(); ++y)
        if (rel(x, y) && prev[y] < 0) {
          prev[y] = static_cast<std::ptrdiff_t>(x);
          queue.push_back(y);
        }
    }
    std::vector<ElementId> out{to};
    while (out.back() != from) out.push_back(static_cast<ElementId>(prev[out.back()]));
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto forward = path(a, b);
  auto back = path(b, a);
  forward.insert(forward.end(), back.begin() + 1, back.end());
  return forward;
}

}  // namespace

Poset lll_closure(const LLRelation& rel) {
  const std::size_t n = rel.rel.size();
  Poset p{rel.rel, {}};
  for (ElementId i = 0; i < n; ++i) p.leq.set(i, i);
  for (ElementId k = 0; k < n; ++k)
    for (ElementId i = 0; i < n; ++i)
      if (p.leq(i, k)) p.leq.row(i) |= p.leq.row(k);

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a)) {
        auto cycle = find_cycle(rel.rel, a, b);
        std::string msg = "<< has a cycle through elements";
        for (auto x : cycle) msg += " " + std::to_string(x);
        throw CyclicLL(std::move(cycle), msg);
      }

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (ElementId c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

OrderedSemigroup::OrderedSemigroup(CayleyTable S) : OrderedSemigroup(S, semidet::star_plus(S)) {}

OrderedSemigroup::OrderedSemigroup(CayleyTable S, StarPlus sp)
    : table_(std::move(S)), sp_(std::move(sp)) {
  for (ElementId s = 0; s < table_.size(); ++s)
    if (in_basis(s)) basis_.push_back(s);
  ll_ = ll_relation(table_, sp_);
  poset_ = lll_closure(ll_);
}

std::optional<OrderedSemigroup> OrderedSemigroup::try_build(const CayleyTable& S) {
  auto sp = try_star_plus(S);
  if (!sp) return std::nullopt;
  return OrderedSemigroup(S, std::move(*sp));
}

ElementSet OrderedSemigroup::basis_down_set(ElementId s) const {
  ElementSet out;
  for (ElementId a : basis_)
    if (leq(a, s)) out.push_back(a);
  return out;
}

std::size_t essential_index(const OrderedSemigroup& os, ElementId lower, ElementId upper) {
  if (!os.leq(lower, upper)) throw NotComparable("essential index of incomparable elements");
  if (os.ll(lower, upper)) return 0;
  const std::size_t n = os.table().size();
  std::vector<std::size_t> dist(n, n + 1);
  std::deque<ElementId> queue{lower};
  dist[lower] = 0;
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    if (x == upper) return dist[x] - 1;
    for (ElementId y = 0; y < n; ++y)
      if (y != x && os.ll(x, y) && os.leq(y, upper) && dist[y] > n) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  throw NotComparable("no <<-chain between comparable elements");
}

ElementId phi_pair(const OrderedSemigroup& os, ElementId s, ElementId t) {
  return os.plus(os.mul(os.star(s), t));
}

ElementId phi_limit(const OrderedSemigroup& os, ElementId s, ElementId t) {
  const std::size_t cap = os.table().size() * os.table().size() + 1;
  ElementId prev = phi_pair(os, s, t);
  for (std::size_t i = 0; i < cap; ++i) {
    const ElementId cur = phi_pair(os, os.mul(s, prev), os.mul(prev, t));
    if (cur == prev) return cur;
    prev = cur;
  }
  throw NoConvergence("phi sequence of (" + os.table().label(s) + ", " + os.table().label(t) +
                      ") does not stabilise");
}

std::optional<ElementId> sharp(const OrderedSemigroup& os, ElementId s, ElementId t) {
  const ElementId st = os.mul(s, t);
  if (os.algebra_zero(st)) return std::nullopt;
  if (os.plus(s) == os.plus(st) && os.star(t) == os.star(st) && os.star(s) == os.plus(t))
    return st;
  return std::nullopt;
}

std::optional<ElementId> sharp_e(const OrderedSemigroup& os, ElementId s, ElementId t,
                                 ElementId e) {
  if (os.star(s) != e) return std::nullopt;
  return sharp(os, s, t);
}

namespace {

// Existence of t' << t_1 << ... << t_n << t (n >= 1) with every t_i^+ = phi and
// phi^{(a, t t_n^* ... t_1^* t'^*)} = phi. Searched downward from t; the state is
// the last placed chain element together with the accumulated product.
bool pair_chain_exists(const OrderedSemigroup& os, ElementId lower, ElementId upper, ElementId phi,
                       ElementId a) {
  const std::size_t n = os.table().size();
  std::set<std::pair<ElementId, ElementId>> seen;
  std::vector<std::pair<ElementId, ElementId>> stack{{upper, upper}};
  while (!stack.empty()) {
    auto [cur, prod] = stack.back();
    stack.pop_back();
    for (ElementId x = 0; x < n; ++x) {
      if (x == cur || !os.ll(x, cur)) continue;
      if (x == lower) {
        if (cur != upper && phi_limit(os, a, os.mul(prod, os.star(lower))) == phi) return true;
        continue;
      }
      if (os.plus(x) != phi || !os.leq(lower, x)) continue;
      std::pair next{x, os.mul(prod, os.star(x))};
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

}  // namespace

bool pair_ll(const OrderedSemigroup& os, ElementId s1, ElementId t1, ElementId s, ElementId t) {
  if (!os.ll(s1, s) || !os.leq(t1, t)) return false;
  const ElementId a = os.mul(os.plus(s1), s);
  const ElementId phi = phi_limit(os, a, os.mul(t, os.star(t1)));
  if (!sharp_e(os, s1, t1, phi)) return false;
  if (os.ll(t1, t)) return true;
  const ElementId prod = os.mul(s1, t1);
  if (os.ll(prod, os.mul(s, t)) || prod != t1) return false;
  if (os.plus(t1) != phi) return false;
  return pair_chain_exists(os, t1, t, phi, a);
}

PairOrder::PairOrder(const OrderedSemigroup& os)
    : os_(&os), n_(os.table().size()), memo_(n_ * n_ * n_ * n_, -1) {}

bool PairOrder::operator()(ElementId s1, ElementId t1, ElementId s, ElementId t) const {
  auto& slot = memo_[index(s1, t1, s, t)];
  if (slot < 0) slot = pair_ll(*os_, s1, t1, s, t) ? 1 : 0;
  return slot == 1;
}

std::optional<std::vector<ElementId>> pseudo_chain(const OrderedSemigroup& os, ElementId u,
                                                   ElementId s, ElementId t) {
  const ElementId st = os.mul(s, t);
  const std::size_t depth = essential_index(os, u, st);
  if (depth == 0) return std::vector<ElementId>{u, st};
  const ElementId a = os.mul(os.plus(u), s);
  const ElementId phi = phi_limit(os, a, os.mul(t, os.star(u)));
  if (os.plus(u) != phi) return std::nullopt;

  const std::size_t n = os.table().size();
  // chain holds st, v_n, ..., v_1 as they are placed.
  std::vector<ElementId> chain{st};
  std::set<std::tuple<ElementId, std::size_t, ElementId>> dead;

  auto search = [&](auto&& self, ElementId cur, std::size_t remaining, ElementId prod) -> bool {
    if (remaining == 0) {
      if (!os.ll(u, cur)) return false;
      return phi_limit(os, a, os.mul(prod, os.star(u))) == phi;
    }
    if (dead.count({cur, remaining, prod})) return false;
    for (ElementId x = 0; x < n; ++x) {
      if (x == cur || x == u || !os.ll(x, cur)) continue;
      if (os.plus(x) != phi || !os.leq(u, x)) continue;
      if (cur == st && !os.ll(x, t)) continue;
      chain.push_back(x);
      if (self(self, x, remaining - 1, os.mul(prod, os.star(x)))) return true;
      chain.pop_back();
    }
    dead.insert({cur, remaining, prod});
    return false;
  };
  if (!search(search, st, depth, t)) return std::nullopt;
  chain.push_back(u);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

SmoothnessReport is_pseudo_ll_transitive(const OrderedSemigroup& os) {
  SmoothnessReport report;
  for (ElementId s : os.basis())
    for (ElementId t : os.basis()) {
      const ElementId st = os.mul(s, t);
      if (os.algebra_zero(st)) continue;
      for (ElementId u : os.basis()) {
        if (!os.leq(u, st) || os.ll(u, st)) continue;
        if (!pseudo_chain(os, u, s, t)) {
          report.pseudo_counterexample = PseudoCounterexample{u, s, t, essential_index(os, u, st)};
          return report;
        }
      }
    }
  report.pseudo_ll_transitive = true;
  return report;
}

SmoothnessReport is_lll_smooth(const OrderedSemigroup& os) {
  SmoothnessReport report = is_pseudo_ll_transitive(os);
  if (!report.pseudo_ll_transitive) return report;

  const ElementSet& B = os.basis();
  const PairOrder pair(os);
  auto fail = [&](int condition, std::vector<ElementId> witness) {
    report.violated_condition = condition;
    report.witness = std::move(witness);
    return report;
  };

  // (1) s'' # t'' != 0  =>  phi^{(s''^+ s', t' t''^*)} = phi(s''^+ s', t' t''^*).
  for (ElementId s1 : B)
    for (ElementId s2 : B) {
      if (!os.leq(s2, s1)) continue;
      for (ElementId t1 : B)
        for (ElementId t2 : B) {
          if (!os.leq(t2, t1) || !sharp(os, s2, t2)) continue;
          const ElementId a = os.mul(os.plus(s2), s1);
          const ElementId b = os.mul(t1, os.star(t2));
          if (phi_limit(os, a, b) != phi_pair(os, a, b)) return fail(1, {s2, s1, t2, t1});
        }
    }

  // (2) (s'', t'') << (s', t')  <=>  (s'', t'') << (s', t).
  for (ElementId s1 : B)
    for (ElementId s2 : B) {
      if (!os.leq(s2, s1)) continue;
      for (ElementId t : B)
        for (ElementId t1 : B) {
          if (!os.leq(t1, t)) continue;
          for (ElementId t2 : B) {
            if (!os.leq(t2, t1)) continue;
            if (pair(s2, t2, s1, t1) != pair(s2, t2, s1, t))
              return fail(2, {s2, s1, t2, t1, t});
          }
        }
    }

  // (3) s'' <<< s'_1 <<< s'_2: (s'', t) << (s'_2, t)  =>  (s'', t) << (s'_1, t).
  for (ElementId lo : B)
    for (ElementId mid : B) {
      if (!os.leq(lo, mid)) continue;
      for (ElementId hi : B) {
        if (!os.leq(mid, hi)) continue;
        for (ElementId t : B)
          if (pair(lo, t, hi, t) && !pair(lo, t, mid, t)) return fail(3, {lo, mid, hi, t});
      }
    }

  report.lll_smooth = true;
  return report;
}

}  // namespace semidet
