#include "semidet/report.hpp"

#include <algorithm>
#include <sstream>

#include "semidet/table_io.hpp"

namespace semidet {

namespace {

Json labels_of(const CayleyTable& S, const std::vector<ElementId>& xs) {
  Json out = Json::array();
  for (ElementId x : xs) out.push_back(S.label(x));
  return out;
}

}  // namespace

Json envelope(const std::string& section, Json body) {
  Json out;
  out["schema"] = kSchemaVersion;
  out[section] = std::move(body);
  return out;
}

Json to_json(const OrderedSemigroup& os, const SmoothnessReport& r) {
  const CayleyTable& S = os.table();
  Json out;
  out["pseudo_ll_transitive"] = r.pseudo_ll_transitive;
  if (r.pseudo_counterexample) {
    const auto& c = *r.pseudo_counterexample;
    out["pseudo_counterexample"] = {
        {"u", S.label(c.u)}, {"s", S.label(c.s)}, {"t", S.label(c.t)}, {"n", c.n}};
  } else {
    out["pseudo_counterexample"] = nullptr;
  }
  out["lll_smooth"] = r.lll_smooth;
  out["violated_condition"] = r.violated_condition;
  out["witness"] = labels_of(S, r.witness);
  return out;
}

Json to_json(const CayleyTable& S, const Factorization& f) {
  const auto names = variable_names(S);
  Json out;
  out["contracted"] = f.contracted;
  out["sign"] = f.sign;
  Json factors = Json::array();
  for (const Factor& fac : f.factors)
    factors.push_back({{"idempotent", S.label(fac.idempotent)},
                       {"theta", canonical_string(fac.theta, names)},
                       {"polynomial", canonical_string(fac.substituted, names)}});
  out["factors"] = std::move(factors);
  out["det_M"] = canonical_string(f.det_M, names);
  out["det_Mprime"] = canonical_string(f.det_Mprime, names);
  out["product"] = canonical_string(f.product, names);
  out["direct"] = canonical_string(f.direct, names);
  out["equal"] = f.equal;
  return out;
}

Json to_json(const ConjectureReport& r) {
  Json out;
  out["order"] = r.order;
  out["exhaustive"] = r.exhaustive;
  out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  out["tables_scanned"] = r.tables_scanned;
  out["tables_passing_filters"] = r.tables_passing_filters;
  out["pseudo_ll_transitive_count"] = r.pseudo_ll_transitive_count;
  out["singleton_rich_count"] = r.singleton_rich_count;
  out["singleton_rich_pseudo_count"] = r.singleton_rich_pseudo_count;
  out["cyclic_ll_count"] = r.cyclic_ll_count;
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) {
    const CayleyTable& S = c.table;
    cex.push_back({{"table", render_document(to_document(S))},
                   {"u", S.label(c.triple.u)},
                   {"s", S.label(c.triple.s)},
                   {"t", S.label(c.triple.t)},
                   {"n", c.triple.n}});
  }
  out["counterexamples"] = std::move(cex);
  return out;
}

Json to_json(const CayleyTable& S, const StructureConstants& sc) {
  Json out;
  out["basis"] = labels_of(S, sc.basis());
  Json entries = Json::array();
  for (ElementId a : sc.basis())
    for (ElementId b : sc.basis()) {
      const FormalSum p = sc.product(a, b);
      if (p.is_zero()) continue;
      Json terms = Json::object();
      for (const auto& [e, c] : p.terms()) terms[S.label(e)] = c;
      entries.push_back({{"left", S.label(a)}, {"right", S.label(b)}, {"product", terms}});
    }
  out["products"] = std::move(entries);
  return out;
}

std::string render_star_table_paper(const CayleyTable& S, const StructureConstants& star) {
  const ElementSet& basis = star.basis();
  const std::size_t d = basis.size();
  std::vector<std::vector<std::string>> grid(d + 1, std::vector<std::string>(d + 1));
  grid[0][0] = "(S,*)";
  for (std::size_t i = 0; i < d; ++i) {
    grid[0][i + 1] = S.label(basis[i]);
    grid[i + 1][0] = S.label(basis[i]);
    for (std::size_t j = 0; j < d; ++j)
      grid[i + 1][j + 1] = star.product(basis[i], basis[j]).render(S);
  }
  std::vector<std::size_t> width(d + 1, 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j <= d; ++j) width[j] = std::max(width[j], row[j].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line = row[0] + std::string(width[0] - row[0].size(), ' ') + " |";
    for (std::size_t j = 1; j <= d; ++j)
      line += " " + std::string(width[j] - row[j].size(), ' ') + row[j];
    out << line << '\n';
  };
  emit(grid[0]);
  std::size_t rule = width[0] + 2;
  for (std::size_t j = 1; j <= d; ++j) rule += width[j] + 1;
  out << std::string(width[0] + 1, '-') << '+' << std::string(rule - width[0] - 2, '-') << '\n';
  for (std::size_t i = 1; i <= d; ++i) emit(grid[i]);
  return out.str();
}

std::string render_star_table_plain(const CayleyTable& S, const StructureConstants& star) {
  std::ostringstream out;
  for (ElementId a : star.basis())
    for (ElementId b : star.basis()) {
      const FormalSum p = star.product(a, b);
      if (!p.is_zero()) out << S.label(a) << " * " << S.label(b) << " = " << p.render(S) << '\n';
    }
  return out.str();
}

std::string render_set(const CayleyTable& S, const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += S.label(set[i]);
  }
  return out + "}";
}

}  // namespace semidet
