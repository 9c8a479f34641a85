#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "semidet/cayley_table.hpp"

namespace semidet {

using Rational = boost::multiprecision::cpp_rational;

/// Sorted list of elements; used for idempotent sets, ideals and classes.
using ElementSet = std::vector<ElementId>;

enum class GreenKind { R, L, H, J, TildeL, TildeR, TildeH };

std::string_view to_string(GreenKind kind);
std::optional<GreenKind> green_kind_from_string(std::string_view name);

struct GreenPartition {
  GreenKind kind;
  /// Classes ordered by smallest member; members sorted.
  std::vector<ElementSet> classes;

  /// Index into `classes` of the class containing s.
  std::size_t class_of(ElementId s) const;
};

struct PhiSets {
  ElementSet right;  ///< idempotents e with s e = s
  ElementSet left;   ///< idempotents e with e s = s
};

/// s -> s^* and s -> s^+ of a singleton-rich semigroup.
struct StarPlus {
  std::vector<ElementId> star;
  std::vector<ElementId> plus;
};

struct EcomResult {
  bool ecom = true;
  std::optional<std::pair<ElementId, ElementId>> witness;
};

struct UnitalResult {
  bool unital = false;
  /// Coefficients lambda_s of an identity sum_s lambda_s s of the semigroup algebra.
  std::vector<Rational> coefficients;
};

using IdempotentPair = std::pair<ElementId, ElementId>;

bool is_idempotent(const CayleyTable& S, ElementId e);
ElementSet idempotents(const CayleyTable& S);

/// The unique idempotent power of s.
ElementId omega_power(const CayleyTable& S, ElementId s);

GreenPartition green_partition(const CayleyTable& S, GreenKind kind);

PhiSets phi_sets(const CayleyTable& S, ElementId s);

/// Closure of gens under multiplication.
ElementSet generated_subsemigroup(const CayleyTable& S, const ElementSet& gens);

/// Minimal two-sided ideal of the subsemigroup generated by gens.
ElementSet kernel_of_generated(const CayleyTable& S, const ElementSet& gens);

/// Throws EmptyPhiSet or NotSingletonRich when the maps are not defined.
StarPlus star_plus(const CayleyTable& S);

/// Non-throwing variant: nullopt exactly when star_plus would throw.
std::optional<StarPlus> try_star_plus(const CayleyTable& S);

EcomResult is_ecom(const CayleyTable& S);

/// Decides whether the semigroup algebra has an identity by an exact linear
/// solve over the rationals.
UnitalResult algebra_has_identity(const CayleyTable& S);

/// Natural order on idempotents: e <= f iff ef = fe = e.
bool natural_leq(const CayleyTable& S, ElementId e, ElementId f);

/// E_S: non-commuting idempotent pairs minimal under the componentwise natural
/// order. Ordered lexicographically.
std::vector<IdempotentPair> minimal_noncommuting_pairs(const CayleyTable& S);

}  // namespace semidet
