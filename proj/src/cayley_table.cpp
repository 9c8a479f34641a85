#include "semidet/cayley_table.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "semidet/errors.hpp"

namespace semidet {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

std::optional<std::tuple<ElementId, ElementId, ElementId>> find_associativity_violation(
    std::size_t n, const std::vector<std::uint8_t>& flat) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) return std::tuple{a, b, c};
    }
  return std::nullopt;
}

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint8_t> cells,
                         std::vector<std::string> labels, bool implicit_zero)
    : n_(n), cells_(std::move(cells)), labels_(std::move(labels)), implicit_zero_(implicit_zero) {}

CayleyTable CayleyTable::validate(const RawTable& raw) {
  const std::size_t declared = raw.labels.size();
  if (declared == 0) throw MalformedTable("table declares no elements");
  if (raw.rows.size() != declared)
    throw MalformedTable("expected " + std::to_string(declared) + " rows, got " +
                         std::to_string(raw.rows.size()));

  std::unordered_map<std::string, ElementId> index;
  for (ElementId i = 0; i < declared; ++i) {
    if (raw.labels[i] == kZeroToken) throw MalformedTable("'.' cannot be used as a label");
    if (!index.emplace(raw.labels[i], i).second)
      throw MalformedTable("duplicate label '" + raw.labels[i] + "'");
  }

  bool uses_dot = false;
  for (std::size_t r = 0; r < declared; ++r) {
    if (raw.rows[r].size() != declared)
      throw MalformedTable("row " + std::to_string(r) + " has " +
                           std::to_string(raw.rows[r].size()) + " entries, expected " +
                           std::to_string(declared));
    for (const auto& tok : raw.rows[r]) {
      if (tok == kZeroToken)
        uses_dot = true;
      else if (!index.count(tok))
        throw MalformedTable("unknown element '" + tok + "' in row " + std::to_string(r));
    }
  }

  std::vector<std::string> labels = raw.labels;
  bool implicit = false;
  ElementId zero_id = 0;
  if (uses_dot) {
    if (auto it = index.find(kImplicitZeroLabel); it != index.end()) {
      zero_id = it->second;
    } else {
      zero_id = declared;
      labels.emplace_back(kImplicitZeroLabel);
      implicit = true;
    }
  }
  const std::size_t n = labels.size();
  if (n > kMaxOrder) throw MalformedTable("table exceeds " + std::to_string(kMaxOrder) + " elements");

  std::vector<std::uint8_t> cells(n * n, 0);
  for (std::size_t r = 0; r < declared; ++r)
    for (std::size_t c = 0; c < declared; ++c) {
      const auto& tok = raw.rows[r][c];
      cells[r * n + c] = static_cast<std::uint8_t>(tok == kZeroToken ? zero_id : index.at(tok));
    }
  if (implicit)
    for (std::size_t i = 0; i < n; ++i) {
      cells[zero_id * n + i] = static_cast<std::uint8_t>(zero_id);
      cells[i * n + zero_id] = static_cast<std::uint8_t>(zero_id);
    }

  CayleyTable t(n, std::move(cells), std::move(labels), implicit);
  t.check_associative();
  t.detect_zero();
  if (uses_dot && !t.is_zero(zero_id))
    throw MalformedTable("'.' entries refer to '" + t.label(zero_id) + "', which is not a zero");
  return t;
}

CayleyTable CayleyTable::from_indices(std::vector<std::vector<ElementId>> mul,
                                      std::vector<std::string> labels) {
  const std::size_t n = mul.size();
  if (n == 0) throw MalformedTable("table declares no elements");
  if (n > kMaxOrder) throw MalformedTable("table exceeds " + std::to_string(kMaxOrder) + " elements");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw MalformedTable("label count does not match table size");
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (mul[r].size() != n)
      throw MalformedTable("row " + std::to_string(r) + " has " + std::to_string(mul[r].size()) +
                           " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (mul[r][c] >= n) throw MalformedTable("entry out of range in row " + std::to_string(r));
      cells[r * n + c] = static_cast<std::uint8_t>(mul[r][c]);
    }
  }
  CayleyTable t(n, std::move(cells), std::move(labels), false);
  t.check_associative();
  t.detect_zero();
  return t;
}

CayleyTable CayleyTable::from_flat_unchecked(std::size_t n, std::vector<std::uint8_t> flat,
                                             std::vector<std::string> labels) {
  if (n == 0 || flat.size() != n * n) throw MalformedTable("flat table has wrong size");
  if (labels.empty()) labels = default_labels(n);
  CayleyTable t(n, std::move(flat), std::move(labels), false);
  t.detect_zero();
  return t;
}

void CayleyTable::check_associative() const {
  if (auto v = find_associativity_violation(n_, cells_)) {
    auto [a, b, c] = *v;
    throw NotAssociative(a, b, c,
                         "not associative: (" + labels_[a] + labels_[b] + ")" + labels_[c] +
                             " != " + labels_[a] + "(" + labels_[b] + labels_[c] + ")");
  }
}

void CayleyTable::detect_zero() {
  zero_.reset();
  for (ElementId z = 0; z < n_; ++z) {
    bool ok = true;
    for (ElementId s = 0; s < n_ && ok; ++s) ok = mul(z, s) == z && mul(s, z) == z;
    if (ok) {
      zero_ = z;
      return;
    }
  }
}

std::optional<ElementId> CayleyTable::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementId>(it - labels_.begin());
}

std::optional<ElementId> CayleyTable::identity() const noexcept {
  for (ElementId e = 0; e < n_; ++e) {
    bool ok = true;
    for (ElementId s = 0; s < n_ && ok; ++s) ok = mul(e, s) == s && mul(s, e) == s;
    if (ok) return e;
  }
  return std::nullopt;
}

CayleyTable CayleyTable::transposed() const {
  std::vector<std::uint8_t> cells(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) cells[a * n_ + b] = cells_[b * n_ + a];
  CayleyTable t(n_, std::move(cells), labels_, implicit_zero_);
  t.zero_ = zero_;
  return t;
}

}  // namespace semidet
