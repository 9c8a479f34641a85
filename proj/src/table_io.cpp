#include "semidet/table_io.hpp"

#include <fstream>
#include <sstream>

#include "semidet/errors.hpp"

namespace semidet {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

TableDocument parse_document(std::string_view text) {
  TableDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      for (const auto& t : tokens) {
        if (t.text == CayleyTable::kZeroToken || t.text == "|")
          throw ParseError(line_no, t.column, "'" + t.text + "' is not a valid label");
        for (const auto& seen : doc.labels)
          if (seen == t.text) throw ParseError(line_no, t.column, "duplicate label '" + t.text + "'");
        doc.labels.push_back(t.text);
      }
      have_header = true;
    } else {
      const std::size_t r = doc.rows.size();
      const std::size_t n = doc.labels.size();
      if (r >= n) throw ParseError(line_no, tokens.front().column, "more rows than elements");
      if (tokens.size() == n + 2 && tokens[1].text == "|") {
        if (tokens[0].text != doc.labels[r])
          throw ParseError(line_no, tokens[0].column,
                           "row label '" + tokens[0].text + "' should be '" + doc.labels[r] + "'");
        tokens.erase(tokens.begin(), tokens.begin() + 2);
      }
      if (tokens.size() != n)
        throw ParseError(line_no, tokens.size() > n ? tokens[n].column : line.size() + 1,
                         "row has " + std::to_string(tokens.size()) + " entries, expected " +
                             std::to_string(n));
      std::vector<std::string> row;
      for (const auto& t : tokens) {
        bool known = t.text == CayleyTable::kZeroToken;
        for (std::size_t i = 0; i < n && !known; ++i) known = doc.labels[i] == t.text;
        if (!known) throw ParseError(line_no, t.column, "unknown element '" + t.text + "'");
        row.push_back(t.text);
      }
      doc.rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, 1, "missing label line");
  if (doc.rows.size() != doc.labels.size())
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(doc.labels.size()) + " rows, got " +
                         std::to_string(doc.rows.size()));
  return doc;
}

std::string render_document(const TableDocument& doc) {
  std::string out;
  auto join = [&](const std::vector<std::string>& tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? " " : "") + tokens[i];
    out += "\n";
  };
  join(doc.labels);
  for (const auto& row : doc.rows) join(row);
  return out;
}

CayleyTable parse_table(std::string_view text) {
  TableDocument doc = parse_document(text);
  return CayleyTable::validate(RawTable{std::move(doc.labels), std::move(doc.rows)});
}

CayleyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedTable("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str());
}

TableDocument to_document(const CayleyTable& S) {
  TableDocument doc;
  std::vector<ElementId> shown;
  for (ElementId s = 0; s < S.size(); ++s)
    if (!(S.implicit_zero() && S.is_zero(s))) shown.push_back(s);
  for (ElementId s : shown) doc.labels.push_back(S.label(s));
  for (ElementId a : shown) {
    std::vector<std::string> row;
    for (ElementId b : shown) {
      const ElementId p = S(a, b);
      row.push_back(S.implicit_zero() && S.is_zero(p) ? CayleyTable::kZeroToken : S.label(p));
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

}  // namespace semidet
