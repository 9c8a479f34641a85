#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semidet/cayley_table.hpp"
#include "semidet/order.hpp"

namespace semidet {

/// Conjunctive property filter over tables.
struct EnumerationFilter {
  bool require_unital = false;
  bool require_singleton_rich = false;
  bool require_not_ecom = false;
  bool require_zero = false;

  /// The hypotheses every analysis in this library relies on.
  static EnumerationFilter standing_assumptions() { return {true, true, false, false}; }

  bool passes(const CayleyTable& S) const;
};

inline constexpr std::size_t kExhaustiveCap = 6;

/// Visits every associative table on {0..n-1} passing the filter, each once, in
/// lexicographic order of the row-major table. Throws OrderTooLarge for n > kExhaustiveCap.
void enumerate(std::size_t n, const EnumerationFilter& filter,
               const std::function<void(const CayleyTable&)>& visit);

std::vector<CayleyTable> enumerate_all(std::size_t n, const EnumerationFilter& filter = {});

/// Number of labelled associative tables of order n.
std::uint64_t count_semigroups(std::size_t n);

/// Lexicographically smallest row-major table over all relabellings and the transpose.
std::vector<std::uint8_t> canonical_form(const CayleyTable& S);

/// Number of classes up to isomorphism and anti-isomorphism.
std::size_t count_up_to_iso_anti(std::size_t n);

/// Random associative table of order n: cells are filled in row-major order with
/// values tried in random order, backtracking on associativity conflicts.
CayleyTable random_semigroup(std::size_t n, std::mt19937_64& rng);

struct ConjectureOptions {
  /// Exhaustive when n <= kExhaustiveCap and samples == 0; otherwise sampling.
  std::size_t samples = 0;
  std::uint64_t seed = 20240607;
  unsigned jobs = 1;
};

struct ConjectureCounterexample {
  CayleyTable table;
  PseudoCounterexample triple;
};

struct ConjectureReport {
  std::size_t order = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::uint64_t tables_scanned = 0;
  std::uint64_t tables_passing_filters = 0;  ///< unital and singleton-rich
  std::uint64_t pseudo_ll_transitive_count = 0;
  std::vector<ConjectureCounterexample> counterexamples;
  /// Unfiltered tally: tables where << is defined (singleton-rich), unital or not.
  std::uint64_t singleton_rich_count = 0;
  std::uint64_t singleton_rich_pseudo_count = 0;
  std::uint64_t cyclic_ll_count = 0;

  void merge(const ConjectureReport& other);
};

ConjectureReport verify_conjecture(std::size_t n, const ConjectureOptions& options = {});

}  // namespace semidet
