#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semidet/order.hpp"

namespace semidet {

/// Integer Mobius function of a poset; mu(a, b) is meaningful only when a <= b.
class MobiusTable {
 public:
  MobiusTable() = default;
  explicit MobiusTable(const Poset& poset);

  std::int64_t operator()(ElementId a, ElementId b) const noexcept { return mu_[a * n_ + b]; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> mu_;
};

MobiusTable mobius(const Poset& poset);

/// Finite integer combination of basis elements. Zero coefficients are never stored.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum of(ElementId s, std::int64_t c = 1);

  void add(ElementId s, std::int64_t c);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum scaled(std::int64_t c) const;

  std::int64_t coeff(ElementId s) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<ElementId, std::int64_t>& terms() const noexcept { return terms_; }

  /// Signed sum of labels in element order, e.g. "y+z-u"; "." for zero.
  std::string render(const CayleyTable& S) const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<ElementId, std::int64_t> terms_;
};

/// Product in the (contracted) semigroup algebra, extended bilinearly.
FormalSum algebra_product(const OrderedSemigroup& os, const FormalSum& a, const FormalSum& b);

/// Z(s) = sum of basis elements below s, extended linearly.
FormalSum z_map(const OrderedSemigroup& os, const FormalSum& x);
/// Inverse of z_map by Mobius inversion.
FormalSum z_inverse(const OrderedSemigroup& os, const MobiusTable& mu, const FormalSum& x);

/// Tensor c[(b'', b, b')] with b b' = sum_{b''} c b'' over an explicit basis.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(ElementSet basis);

  const ElementSet& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// Arguments are element ids, not basis positions.
  std::int64_t operator()(ElementId result, ElementId left, ElementId right) const;
  void set(ElementId result, ElementId left, ElementId right, std::int64_t value);

  /// Product of two basis elements as a formal sum.
  FormalSum product(ElementId left, ElementId right) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t pos(ElementId s) const;
  ElementSet basis_;
  std::vector<std::size_t> position_;
  std::vector<std::int64_t> c_;
};

/// Structure constants of the semigroup algebra itself (0/1 entries).
StructureConstants semigroup_structure_constants(const OrderedSemigroup& os);

/// The Z-transported product (Z(s) * Z(t) := sum over (s', t') << (s, t) of s't').
FormalSum pair_sum(const OrderedSemigroup& os, const PairOrder& pair, ElementId s, ElementId t);

/// xi(s'', t'') relative to the ambient pair (s, t).
std::int64_t xi(const OrderedSemigroup& os, const MobiusTable& mu, const PairOrder& pair,
                ElementId s2, ElementId t2, ElementId s, ElementId t);

/// s * t by the double Mobius sum of xi coefficients.
FormalSum star_product_xi(const OrderedSemigroup& os, const MobiusTable& mu,
                          const PairOrder& pair, ElementId s, ElementId t);

/// s * t = Z(Z^{-1}(s) Z^{-1}(t)).
FormalSum star_product_conjugation(const OrderedSemigroup& os, const MobiusTable& mu, ElementId s,
                                   ElementId t);

/// Structure constants of (S, *) computed by conjugation.
StructureConstants star_structure_constants(const OrderedSemigroup& os, const MobiusTable& mu);

struct HomomorphismCheck {
  bool holds = true;
  std::optional<std::pair<ElementId, ElementId>> counterexample;
  FormalSum expected;  ///< Z(st)
  FormalSum actual;    ///< pair-order sum
};

/// Z(s) * Z(t) = Z(st) for all basis pairs, using the pair-order sum.
HomomorphismCheck check_homomorphism(const OrderedSemigroup& os);

struct StarAgreement {
  bool agree = true;
  std::optional<std::pair<ElementId, ElementId>> counterexample;
  FormalSum by_xi;
  FormalSum by_conjugation;
};

/// Compares the two independent computations of the * product on all basis pairs.
StarAgreement compare_star_products(const OrderedSemigroup& os, const MobiusTable& mu);

struct Theorem43Discrepancy {
  ElementId s, t, t_prime;
  std::string what;
};

/// Checks the closed forms of s * t for l-l-l-smooth semigroups.
std::vector<Theorem43Discrepancy> theorem43_check(const OrderedSemigroup& os,
                                                  const MobiusTable& mu,
                                                  const StructureConstants& star);

struct StarWitness {
  ElementId s, t;
  FormalSum product;
};

/// First (s, t) in element order with s^* != t^+ and s * t != 0. Throws NoWitness.
StarWitness noncommuting_star_witness(const OrderedSemigroup& os, const StructureConstants& star);

/// Idempotents e != f with ef != fe, (ef)^+ = e, (ef)^* = f and no <<-chain from
/// ef to e (resp. f) through elements outside {e, ef} (resp. {f, ef}).
/// Throws NoWitness when none exists.
IdempotentPair minimal_pair_with_chain_property(const OrderedSemigroup& os);

/// True when there is a chain from << lo << x_1 << ... << x_k << hi (k >= 1)
/// whose intermediate elements avoid `avoid`.
bool has_chain_avoiding(const OrderedSemigroup& os, ElementId lo, ElementId hi,
                        const ElementSet& avoid);

}  // namespace semidet
