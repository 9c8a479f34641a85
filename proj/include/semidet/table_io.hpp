#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semidet/cayley_table.hpp"

namespace semidet {

/// Text form of a Cayley table.
///
///     # comment
///     y z u          <- element labels
///     . . y          <- one row per element, "." is the zero
///     ...
///
/// A row may be prefixed by its own label and a "|" separator.
struct TableDocument {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Throws ParseError (with 1-based line and column) on malformed input.
TableDocument parse_document(std::string_view text);
std::string render_document(const TableDocument& doc);

/// Parse and validate in one step.
CayleyTable parse_table(std::string_view text);
CayleyTable load_table(const std::string& path);

/// Document form of a table; an implicit zero is written as ".".
TableDocument to_document(const CayleyTable& S);

}  // namespace semidet
