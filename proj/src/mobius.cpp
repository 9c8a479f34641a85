#include "semidet/mobius.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "semidet/errors.hpp"

namespace semidet {

MobiusTable::MobiusTable(const Poset& poset) : n_(poset.leq.size()), mu_(n_ * n_, 0) {
  // Linear extension: an element's down-set strictly contains those of the elements below it.
  std::vector<ElementId> order(n_);
  std::iota(order.begin(), order.end(), ElementId{0});
  std::vector<std::size_t> below(n_);
  for (ElementId s = 0; s < n_; ++s) below[s] = poset.down_set(s).size();
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return below[a] < below[b]; });

  for (ElementId a = 0; a < n_; ++a) {
    mu_[a * n_ + a] = 1;
    for (ElementId b : order) {
      if (b == a || !poset(a, b)) continue;
      std::int64_t sum = 0;
      for (ElementId c = 0; c < n_; ++c)
        if (c != b && poset(a, c) && poset(c, b)) sum += mu_[a * n_ + c];
      mu_[a * n_ + b] = -sum;
    }
  }
}

MobiusTable mobius(const Poset& poset) { return MobiusTable(poset); }

FormalSum FormalSum::of(ElementId s, std::int64_t c) {
  FormalSum out;
  out.add(s, c);
  return out;
}

void FormalSum::add(ElementId s, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (auto [s, c] : o.terms_) add(s, c);
  return *this;
}

FormalSum FormalSum::scaled(std::int64_t c) const {
  FormalSum out;
  if (c == 0) return out;
  for (auto [s, v] : terms_) out.terms_.emplace(s, v * c);
  return out;
}

std::int64_t FormalSum::coeff(ElementId s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::string FormalSum::render(const CayleyTable& S) const {
  if (terms_.empty()) return ".";
  std::string out;
  for (auto [s, c] : terms_) {
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += S.label(s);
  }
  return out;
}

FormalSum algebra_product(const OrderedSemigroup& os, const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (auto [s, cs] : a.terms())
    for (auto [t, ct] : b.terms()) {
      const ElementId st = os.mul(s, t);
      if (!os.algebra_zero(st)) out.add(st, cs * ct);
    }
  return out;
}

FormalSum z_map(const OrderedSemigroup& os, const FormalSum& x) {
  FormalSum out;
  for (auto [s, c] : x.terms())
    for (ElementId b : os.basis())
      if (os.leq(b, s)) out.add(b, c);
  return out;
}

FormalSum z_inverse(const OrderedSemigroup& os, const MobiusTable& mu, const FormalSum& x) {
  FormalSum out;
  for (auto [s, c] : x.terms())
    for (ElementId b : os.basis())
      if (os.leq(b, s)) out.add(b, c * mu(b, s));
  return out;
}

StructureConstants::StructureConstants(ElementSet basis) : basis_(std::move(basis)) {
  const std::size_t span = basis_.empty() ? 0 : *std::max_element(basis_.begin(), basis_.end()) + 1;
  position_.assign(span, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < basis_.size(); ++i) position_[basis_[i]] = i;
  c_.assign(basis_.size() * basis_.size() * basis_.size(), 0);
}

std::size_t StructureConstants::pos(ElementId s) const {
  if (s >= position_.size() || position_[s] == static_cast<std::size_t>(-1))
    throw Error("element " + std::to_string(s) + " is not in the basis");
  return position_[s];
}

std::int64_t StructureConstants::operator()(ElementId result, ElementId left,
                                            ElementId right) const {
  const std::size_t d = dim();
  return c_[(pos(result) * d + pos(left)) * d + pos(right)];
}

void StructureConstants::set(ElementId result, ElementId left, ElementId right,
                             std::int64_t value) {
  const std::size_t d = dim();
  c_[(pos(result) * d + pos(left)) * d + pos(right)] = value;
}

FormalSum StructureConstants::product(ElementId left, ElementId right) const {
  FormalSum out;
  for (ElementId r : basis_) out.add(r, (*this)(r, left, right));
  return out;
}

StructureConstants semigroup_structure_constants(const OrderedSemigroup& os) {
  StructureConstants sc(os.basis());
  for (ElementId a : os.basis())
    for (ElementId b : os.basis()) {
      const ElementId ab = os.mul(a, b);
      if (!os.algebra_zero(ab)) sc.set(ab, a, b, 1);
    }
  return sc;
}

FormalSum pair_sum(const OrderedSemigroup& os, const PairOrder& pair, ElementId s, ElementId t) {
  FormalSum out;
  for (ElementId s1 : os.basis()) {
    if (!os.ll(s1, s)) continue;
    for (ElementId t1 : os.basis())
      if (os.leq(t1, t) && pair(s1, t1, s, t)) {
        const ElementId p = os.mul(s1, t1);
        if (!os.algebra_zero(p)) out.add(p, 1);
      }
  }
  return out;
}

std::int64_t xi(const OrderedSemigroup& os, const MobiusTable& mu, const PairOrder& pair,
                ElementId s2, ElementId t2, ElementId s, ElementId t) {
  std::int64_t total = 0;
  for (ElementId s1 : os.basis()) {
    if (!os.leq(s2, s1) || !os.leq(s1, s)) continue;
    std::int64_t inner = 0;
    for (ElementId t1 : os.basis())
      if (os.leq(t2, t1) && os.leq(t1, t) && pair(s2, t2, s1, t1)) inner += mu(t1, t);
    total += inner * mu(s1, s);
  }
  return total;
}

FormalSum star_product_xi(const OrderedSemigroup& os, const MobiusTable& mu,
                          const PairOrder& pair, ElementId s, ElementId t) {
  FormalSum out;
  for (ElementId s2 : os.basis()) {
    if (!os.leq(s2, s)) continue;
    for (ElementId t2 : os.basis()) {
      if (!os.leq(t2, t)) continue;
      const ElementId p = os.mul(s2, t2);
      if (os.algebra_zero(p)) continue;
      out.add(p, xi(os, mu, pair, s2, t2, s, t));
    }
  }
  return out;
}

FormalSum star_product_conjugation(const OrderedSemigroup& os, const MobiusTable& mu, ElementId s,
                                   ElementId t) {
  const FormalSum a = z_inverse(os, mu, FormalSum::of(s));
  const FormalSum b = z_inverse(os, mu, FormalSum::of(t));
  return z_map(os, algebra_product(os, a, b));
}

StructureConstants star_structure_constants(const OrderedSemigroup& os, const MobiusTable& mu) {
  StructureConstants sc(os.basis());
  for (ElementId a : os.basis())
    for (ElementId b : os.basis()) {
      const FormalSum p = star_product_conjugation(os, mu, a, b);
      for (auto [r, c] : p.terms()) sc.set(r, a, b, c);
    }
  return sc;
}

HomomorphismCheck check_homomorphism(const OrderedSemigroup& os) {
  const PairOrder pair(os);
  HomomorphismCheck out;
  for (ElementId s : os.basis())
    for (ElementId t : os.basis()) {
      const ElementId st = os.mul(s, t);
      FormalSum expected = os.algebra_zero(st) ? FormalSum{} : z_map(os, FormalSum::of(st));
      FormalSum actual = pair_sum(os, pair, s, t);
      if (expected != actual) {
        out.holds = false;
        out.counterexample = std::pair{s, t};
        out.expected = std::move(expected);
        out.actual = std::move(actual);
        return out;
      }
    }
  return out;
}

StarAgreement compare_star_products(const OrderedSemigroup& os, const MobiusTable& mu) {
  const PairOrder pair(os);
  StarAgreement out;
  for (ElementId s : os.basis())
    for (ElementId t : os.basis()) {
      FormalSum a = star_product_xi(os, mu, pair, s, t);
      FormalSum b = star_product_conjugation(os, mu, s, t);
      if (a != b) {
        out.agree = false;
        out.counterexample = std::pair{s, t};
        out.by_xi = std::move(a);
        out.by_conjugation = std::move(b);
        return out;
      }
    }
  return out;
}

std::vector<Theorem43Discrepancy> theorem43_check(const OrderedSemigroup& os,
                                                  const MobiusTable& mu,
                                                  const StructureConstants& star) {
  const CayleyTable& S = os.table();
  std::vector<Theorem43Discrepancy> out;
  for (ElementId s : os.basis())
    for (ElementId t : os.basis()) {
      const FormalSum st_star = star.product(s, t);
      if (os.star(s) == os.plus(t)) {
        const auto sh = sharp(os, s, t);
        if (st_star.is_zero() == sh.has_value())
          out.push_back({s, t, t, "s*t != 0 disagrees with s#t != 0"});
        else if (sh && st_star != FormalSum::of(*sh))
          out.push_back({s, t, t, "s*t != st"});
        continue;
      }
      if (st_star.is_zero()) continue;
      const ElementId tp = os.plus(t);
      const ElementId stp = os.mul(s, tp);
      for (ElementId t1 : os.basis()) {
        if (os.plus(t1) != tp) continue;
        const FormalSum prod = star.product(s, t1);
        const bool sh = sharp(os, stp, t1).has_value();
        if (prod.is_zero() == sh) {
          out.push_back({s, t, t1, "s*t' != 0 disagrees with st^+ # t' != 0"});
          continue;
        }
        if (prod.is_zero()) continue;
        std::int64_t coeff = 0;
        for (ElementId s1 : os.basis())
          if (os.leq(stp, s1) && os.leq(s1, s) &&
              natural_leq(S, tp, os.star(os.mul(os.plus(s), s1))))
            coeff += mu(s1, s);
        const ElementId st1 = os.mul(s, t1);
        const FormalSum expected =
            os.algebra_zero(st1) ? FormalSum{} : FormalSum::of(st1, coeff);
        if (prod != expected) out.push_back({s, t, t1, "coefficient formula for s*t' fails"});
      }
    }
  return out;
}

StarWitness noncommuting_star_witness(const OrderedSemigroup& os, const StructureConstants& star) {
  for (ElementId s : os.basis())
    for (ElementId t : os.basis()) {
      if (os.star(s) == os.plus(t)) continue;
      FormalSum p = star.product(s, t);
      if (!p.is_zero()) return {s, t, std::move(p)};
    }
  throw NoWitness("no s, t with s^* != t^+ and s*t != 0");
}

bool has_chain_avoiding(const OrderedSemigroup& os, ElementId lo, ElementId hi,
                        const ElementSet& avoid) {
  const std::size_t n = os.table().size();
  auto blocked = [&](ElementId x) {
    return std::find(avoid.begin(), avoid.end(), x) != avoid.end();
  };
  std::vector<bool> seen(n, false);
  std::deque<ElementId> queue;
  for (ElementId x = 0; x < n; ++x)
    if (x != lo && !blocked(x) && os.ll(lo, x)) {
      seen[x] = true;
      queue.push_back(x);
    }
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    if (x != hi && os.ll(x, hi)) return true;
    for (ElementId y = 0; y < n; ++y)
      if (!seen[y] && !blocked(y) && os.ll(x, y)) {
        seen[y] = true;
        queue.push_back(y);
      }
  }
  return false;
}

IdempotentPair minimal_pair_with_chain_property(const OrderedSemigroup& os) {
  const CayleyTable& S = os.table();
  for (ElementId e : idempotents(S))
    for (ElementId f : idempotents(S)) {
      if (e == f) continue;
      const ElementId ef = S(e, f);
      if (ef == S(f, e) || os.plus(ef) != e || os.star(ef) != f) continue;
      if (has_chain_avoiding(os, ef, e, {e, ef})) continue;
      if (has_chain_avoiding(os, ef, f, {f, ef})) continue;
      return {e, f};
    }
  throw NoWitness("no idempotent pair with the chain property");
}

}  // namespace semidet
