#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace semidet {

/// Position of an element in the declared element list.
using ElementId = std::size_t;

/// Raw, unvalidated table data: labels plus rows of labels, where "." names the zero.
struct RawTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> rows;
};

/// A finite semigroup given by its multiplication table.
///
/// Instances are only produced by the validating factories, so every
/// CayleyTable is total and associative. Tables are immutable.
class CayleyTable {
 public:
  static constexpr std::size_t kMaxOrder = 64;
  static constexpr const char* kZeroToken = ".";
  static constexpr const char* kImplicitZeroLabel = "0";

  /// Validates raw label data. A "." entry adds a zero element labelled "0"
  /// to the universe (unless a declared "0" exists) with its row and column
  /// filled in.
  static CayleyTable validate(const RawTable& raw);

  /// Validates an index table. Labels default to "e0", "e1", ...
  static CayleyTable from_indices(std::vector<std::vector<ElementId>> mul,
                                  std::vector<std::string> labels = {});

  /// Trusted construction for tables known to be associative (e.g. emitted by
  /// the enumerator). Still checks shape and detects the zero.
  static CayleyTable from_flat_unchecked(std::size_t n, std::vector<std::uint8_t> flat,
                                         std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  ElementId mul(ElementId a, ElementId b) const noexcept { return cells_[a * n_ + b]; }
  ElementId operator()(ElementId a, ElementId b) const noexcept { return mul(a, b); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementId s) const { return labels_.at(s); }
  std::optional<ElementId> find(const std::string& label) const;

  std::optional<ElementId> zero() const noexcept { return zero_; }
  bool is_zero(ElementId s) const noexcept { return zero_ && *zero_ == s; }
  /// True when the zero was added by a "." token rather than declared.
  bool implicit_zero() const noexcept { return implicit_zero_; }

  /// Two-sided identity element, if one exists.
  std::optional<ElementId> identity() const noexcept;

  /// Opposite semigroup (a*b := b*a); used for anti-isomorphism checks.
  CayleyTable transposed() const;

  const std::vector<std::uint8_t>& flat() const noexcept { return cells_; }

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  CayleyTable(std::size_t n, std::vector<std::uint8_t> cells, std::vector<std::string> labels,
              bool implicit_zero);
  void detect_zero();
  void check_associative() const;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<std::string> labels_;
  std::optional<ElementId> zero_;
  bool implicit_zero_ = false;
};

/// First violating triple (a, b, c) with (ab)c != a(bc), if any.
std::optional<std::tuple<ElementId, ElementId, ElementId>> find_associativity_violation(
    std::size_t n, const std::vector<std::uint8_t>& flat);

}  // namespace semidet
