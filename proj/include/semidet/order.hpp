#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "semidet/cayley_table.hpp"
#include "semidet/semigroup.hpp"

namespace semidet {

/// Square boolean matrix over element indices, one 64-bit row mask per element.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), rows_(n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(ElementId a, ElementId b) const noexcept { return (rows_[a] >> b) & 1u; }
  void set(ElementId a, ElementId b, bool v = true) noexcept {
    if (v)
      rows_[a] |= std::uint64_t{1} << b;
    else
      rows_[a] &= ~(std::uint64_t{1} << b);
  }
  std::uint64_t row(ElementId a) const noexcept { return rows_[a]; }
  std::uint64_t& row(ElementId a) noexcept { return rows_[a]; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// s << t iff s = s^+ t s^*. Reflexive and antisymmetric; not necessarily transitive.
struct LLRelation {
  BoolMatrix rel;
  bool operator()(ElementId s, ElementId t) const noexcept { return rel(s, t); }
};

/// The partial order generated by <<, with its Hasse diagram.
struct Poset {
  BoolMatrix leq;
  std::vector<std::pair<ElementId, ElementId>> covers;

  bool operator()(ElementId a, ElementId b) const noexcept { return leq(a, b); }
  ElementSet down_set(ElementId s) const;
  ElementSet up_set(ElementId s) const;
};

LLRelation ll_relation(const CayleyTable& S, const StarPlus& sp);

/// Reflexive-transitive closure. Throws CyclicLL when the closure is not antisymmetric.
Poset lll_closure(const LLRelation& rel);

/// A singleton-rich semigroup together with its << relation and order.
///
/// When the table has a zero the analysis is contracted: the algebra basis is
/// the set of nonzero elements and a product equal to the zero is the algebra
/// zero. Element-level maps (star, plus, phi) still act on every element.
class OrderedSemigroup {
 public:
  /// Throws EmptyPhiSet / NotSingletonRich / CyclicLL.
  explicit OrderedSemigroup(CayleyTable S);
  OrderedSemigroup(CayleyTable S, StarPlus sp);

  /// nullopt when the table is not singleton-rich. CyclicLL is still thrown.
  static std::optional<OrderedSemigroup> try_build(const CayleyTable& S);

  const CayleyTable& table() const noexcept { return table_; }
  const StarPlus& star_plus() const noexcept { return sp_; }
  ElementId mul(ElementId a, ElementId b) const noexcept { return table_(a, b); }
  ElementId star(ElementId s) const noexcept { return sp_.star[s]; }
  ElementId plus(ElementId s) const noexcept { return sp_.plus[s]; }

  bool contracted() const noexcept { return table_.zero().has_value(); }
  const ElementSet& basis() const noexcept { return basis_; }
  bool in_basis(ElementId s) const noexcept { return !table_.is_zero(s); }
  /// True when x represents the zero of the (contracted) algebra.
  bool algebra_zero(ElementId x) const noexcept { return table_.is_zero(x); }

  const LLRelation& ll() const noexcept { return ll_; }
  const Poset& poset() const noexcept { return poset_; }
  bool ll(ElementId a, ElementId b) const noexcept { return ll_(a, b); }
  bool leq(ElementId a, ElementId b) const noexcept { return poset_(a, b); }

  /// Basis elements below s in the order (Z-support of s).
  ElementSet basis_down_set(ElementId s) const;

 private:
  CayleyTable table_;
  StarPlus sp_;
  ElementSet basis_;
  LLRelation ll_;
  Poset poset_;
};

/// Number of intermediate elements on a shortest <<-chain from lower to upper
/// (0 when lower << upper). Throws NotComparable unless lower is below upper.
std::size_t essential_index(const OrderedSemigroup& os, ElementId lower, ElementId upper);

/// (s^* t)^+.
ElementId phi_pair(const OrderedSemigroup& os, ElementId s, ElementId t);

/// Limit of phi(s_i, t_i) for s_0 = s, t_0 = t, s_{i+1} = s phi_i, t_{i+1} = phi_i t.
/// Throws NoConvergence if the sequence does not stabilise within |S|^2 + 1 steps.
ElementId phi_limit(const OrderedSemigroup& os, ElementId s, ElementId t);

/// st when s^+ = (st)^+, t^* = (st)^* and s^* = t^+; nullopt for the algebra zero.
std::optional<ElementId> sharp(const OrderedSemigroup& os, ElementId s, ElementId t);
/// As sharp, additionally requiring s^* = t^+ = e.
std::optional<ElementId> sharp_e(const OrderedSemigroup& os, ElementId s, ElementId t, ElementId e);

/// The pair order (s', t') << (s, t).
bool pair_ll(const OrderedSemigroup& os, ElementId s1, ElementId t1, ElementId s, ElementId t);

/// Memoised pair order over basis quadruples.
class PairOrder {
 public:
  explicit PairOrder(const OrderedSemigroup& os);
  bool operator()(ElementId s1, ElementId t1, ElementId s, ElementId t) const;

 private:
  std::size_t index(ElementId s1, ElementId t1, ElementId s, ElementId t) const noexcept {
    return ((s1 * n_ + t1) * n_ + s) * n_ + t;
  }
  const OrderedSemigroup* os_;
  std::size_t n_;
  mutable std::vector<std::int8_t> memo_;
};

struct PseudoCounterexample {
  ElementId u, s, t;
  std::size_t n;  ///< essential index of (u, st)
};

struct SmoothnessReport {
  bool pseudo_ll_transitive = false;
  std::optional<PseudoCounterexample> pseudo_counterexample;
  bool lll_smooth = false;
  /// 1..3 when a smoothness condition fails; 0 otherwise.
  int violated_condition = 0;
  /// Elements witnessing the violation, in the order the condition names them:
  /// (1) s'', s', t'', t'   (2) s'', s', t'', t', t   (3) s'', s'1, s'2, t.
  std::vector<ElementId> witness;
};

/// Searches for a chain satisfying (#) for a single triple. Returns the chain
/// u << v_1 << ... << v_n << st including endpoints, or nullopt.
std::optional<std::vector<ElementId>> pseudo_chain(const OrderedSemigroup& os, ElementId u,
                                                   ElementId s, ElementId t);

/// Only the pseudo part of the report is filled in.
SmoothnessReport is_pseudo_ll_transitive(const OrderedSemigroup& os);

SmoothnessReport is_lll_smooth(const OrderedSemigroup& os);

}  // namespace semidet
