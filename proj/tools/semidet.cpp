// Command-line front end for the semidet library.
//
// Exit codes: 0 success, 1 property violation, 2 input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "semidet/determinant.hpp"
#include "semidet/enumeration.hpp"
#include "semidet/errors.hpp"
#include "semidet/mobius.hpp"
#include "semidet/report.hpp"
#include "semidet/semigroup.hpp"
#include "semidet/table_io.hpp"

namespace {

using namespace semidet;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options {
  std::string file;
  bool json = false;
  std::string format = "paper";
  std::size_t order = 3;
  std::uint64_t seed = ConjectureOptions{}.seed;
  unsigned jobs = 1;
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t samples = 0;
};

void print(const Options& o, const std::string& section, const Json& body,
           const std::string& text) {
  if (o.json)
    std::cout << envelope(section, body).dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_validate(const Options& o) {
  const CayleyTable S = load_table(o.file);
  Json body{{"order", S.size()}, {"labels", S.labels()}};
  body["zero"] = S.zero() ? Json(S.label(*S.zero())) : Json(nullptr);
  std::string text = "ok: " + std::to_string(S.size()) + " elements";
  if (S.zero()) text += ", zero " + S.label(*S.zero());
  print(o, "validate", body, text + "\n");
  return kOk;
}

int cmd_analyze(const Options& o) {
  const CayleyTable S = load_table(o.file);
  Json body;
  std::ostringstream text;
  const ElementSet es = idempotents(S);
  body["idempotents"] = Json::array();
  for (ElementId e : es) body["idempotents"].push_back(S.label(e));
  text << "idempotents: " << render_set(S, es) << '\n';
  for (GreenKind k : {GreenKind::R, GreenKind::L, GreenKind::H, GreenKind::J}) {
    const GreenPartition p = green_partition(S, k);
    Json classes = Json::array();
    text << to_string(k) << "-classes:";
    for (const auto& c : p.classes) {
      Json members = Json::array();
      for (ElementId x : c) members.push_back(S.label(x));
      classes.push_back(std::move(members));
      text << ' ' << render_set(S, c);
    }
    text << '\n';
    body[std::string(to_string(k))] = std::move(classes);
  }
  const auto sp = try_star_plus(S);
  body["singleton_rich"] = sp.has_value();
  text << "singleton-rich: " << (sp ? "true" : "false") << '\n';
  if (sp) {
    Json sj = Json::object();
    for (ElementId s = 0; s < S.size(); ++s) {
      sj[S.label(s)] = {{"star", S.label(sp->star[s])}, {"plus", S.label(sp->plus[s])}};
      text << "  " << S.label(s) << "^* = " << S.label(sp->star[s]) << ", " << S.label(s)
           << "^+ = " << S.label(sp->plus[s]) << '\n';
    }
    body["star_plus"] = std::move(sj);
  }
  const bool ecom = is_ecom(S).ecom;
  const bool unital = algebra_has_identity(S).unital;
  body["ecom"] = ecom;
  body["unital"] = unital;
  text << "ecom: " << (ecom ? "true" : "false") << '\n';
  text << "unital: " << (unital ? "true" : "false") << '\n';
  print(o, "analyze", body, text.str());
  return kOk;
}

int cmd_order(const Options& o) {
  const OrderedSemigroup os(load_table(o.file));
  const CayleyTable& S = os.table();
  Json body;
  std::ostringstream text;
  Json ll = Json::array();
  text << "<< pairs (strict):\n";
  for (ElementId a = 0; a < S.size(); ++a)
    for (ElementId b = 0; b < S.size(); ++b)
      if (a != b && os.ll(a, b)) {
        ll.push_back({S.label(a), S.label(b)});
        text << "  " << S.label(a) << " << " << S.label(b) << '\n';
      }
  body["ll"] = std::move(ll);
  Json lll = Json::array();
  text << "<<< but not << :\n";
  for (ElementId a = 0; a < S.size(); ++a)
    for (ElementId b = 0; b < S.size(); ++b)
      if (os.leq(a, b) && !os.ll(a, b)) {
        lll.push_back({S.label(a), S.label(b)});
        text << "  " << S.label(a) << " <<< " << S.label(b) << '\n';
      }
  body["lll_only"] = std::move(lll);
  Json z = Json::object();
  text << "Z:\n";
  for (ElementId s : os.basis()) {
    const FormalSum zs = z_map(os, FormalSum::of(s));
    z[S.label(s)] = zs.render(S);
    text << "  Z(" << S.label(s) << ") = " << zs.render(S) << '\n';
  }
  body["Z"] = std::move(z);
  print(o, "order", body, text.str());
  return kOk;
}

int cmd_star_table(const Options& o) {
  const OrderedSemigroup os(load_table(o.file));
  const StructureConstants star = star_structure_constants(os, mobius(os.poset()));
  std::string text;
  if (o.format == "paper")
    text = render_star_table_paper(os.table(), star);
  else
    text = render_star_table_plain(os.table(), star);
  print(o, "star_table", to_json(os.table(), star), text);
  return kOk;
}

int cmd_det(const Options& o) {
  const CayleyTable S = load_table(o.file);
  const auto names = variable_names(S);
  Json body;
  std::ostringstream text;
  const Polynomial full = sym_det(semigroup_cayley(S), o.max_dim);
  body["full"] = canonical_string(full, names);
  text << "full: " << canonical_string(full, names) << '\n';
  if (S.zero()) {
    const Polynomial c = sym_det(contracted_cayley(S), o.max_dim);
    body["contracted"] = canonical_string(c, names);
    text << "contracted: " << canonical_string(c, names) << '\n';
  }
  print(o, "det", body, text.str());
  return kOk;
}

int cmd_factor(const Options& o) {
  const CayleyTable S = load_table(o.file);
  const Factorization f = factor_determinant(S, o.max_dim);
  const auto names = variable_names(S);
  std::ostringstream text;
  text << "sign: " << f.sign << '\n';
  for (const Factor& fac : f.factors)
    text << "theta_" << S.label(fac.idempotent) << ": " << canonical_string(fac.theta, names)
         << "  ->  " << canonical_string(fac.substituted, names) << '\n';
  text << "Det M': " << canonical_string(f.det_Mprime, names) << '\n';
  text << "product: " << canonical_string(f.product, names) << '\n';
  text << "direct: " << canonical_string(f.direct, names) << '\n';
  text << "equal: " << (f.equal ? "true" : "false") << '\n';
  print(o, "factor", to_json(S, f), text.str());
  return f.equal ? kOk : kViolation;
}

int cmd_verify_smooth(const Options& o) {
  const OrderedSemigroup os(load_table(o.file));
  const SmoothnessReport r = is_lll_smooth(os);
  std::ostringstream text;
  text << "pseudo_ll_transitive: " << (r.pseudo_ll_transitive ? "true" : "false") << '\n';
  text << "lll_smooth: " << (r.lll_smooth ? "true" : "false") << '\n';
  if (r.violated_condition) {
    text << "violated condition " << r.violated_condition << " at";
    for (ElementId x : r.witness) text << ' ' << os.table().label(x);
    text << '\n';
  }
  print(o, "smoothness", to_json(os, r), text.str());
  return r.lll_smooth ? kOk : kViolation;
}

int cmd_verify_pseudo(const Options& o) {
  const OrderedSemigroup os(load_table(o.file));
  const SmoothnessReport r = is_pseudo_ll_transitive(os);
  std::ostringstream text;
  text << "pseudo_ll_transitive: " << (r.pseudo_ll_transitive ? "true" : "false") << '\n';
  if (r.pseudo_counterexample) {
    const auto& c = *r.pseudo_counterexample;
    const CayleyTable& S = os.table();
    text << "no chain for u = " << S.label(c.u) << ", s = " << S.label(c.s)
         << ", t = " << S.label(c.t) << " (n = " << c.n << ")\n";
  }
  Json body = to_json(os, r);
  body.erase("lll_smooth");
  body.erase("violated_condition");
  body.erase("witness");
  print(o, "pseudo", body, text.str());
  return r.pseudo_ll_transitive ? kOk : kViolation;
}

int cmd_witness(const Options& o) {
  const OrderedSemigroup os(load_table(o.file));
  const StructureConstants star = star_structure_constants(os, mobius(os.poset()));
  const StarWitness w = noncommuting_star_witness(os, star);
  const CayleyTable& S = os.table();
  Json body{{"s", S.label(w.s)}, {"t", S.label(w.t)}, {"product", w.product.render(S)}};
  print(o, "witness", body,
        S.label(w.s) + " * " + S.label(w.t) + " = " + w.product.render(S) + "\n");
  return kOk;
}

int cmd_verify_conjecture(const Options& o) {
  ConjectureOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  const ConjectureReport r = verify_conjecture(o.order, opts);
  std::ostringstream text;
  text << "order " << r.order << (r.exhaustive ? " (exhaustive)" : " (sampled)") << '\n';
  if (r.seed) text << "seed: " << *r.seed << '\n';
  text << "tables scanned: " << r.tables_scanned << '\n';
  text << "unital singleton-rich: " << r.tables_passing_filters << '\n';
  text << "pseudo <<-transitive among them: " << r.pseudo_ll_transitive_count << '\n';
  text << "singleton-rich (any): " << r.singleton_rich_count << ", pseudo <<-transitive "
       << r.singleton_rich_pseudo_count << '\n';
  text << "cyclic <<: " << r.cyclic_ll_count << '\n';
  text << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples) text << render_document(to_document(c.table)) << '\n';
  print(o, "conjecture", to_json(r), text.str());
  return r.counterexamples.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyse finite semigroups given by Cayley tables"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool takes_file;
  };
  const Command commands[] = {
      {"validate", "Parse and validate a table", cmd_validate, true},
      {"analyze", "Idempotents, Green classes, s^* and s^+", cmd_analyze, true},
      {"order", "The << relation, its closure and Z", cmd_order, true},
      {"star-table", "Cayley table of (S,*)", cmd_star_table, true},
      {"det", "Full and contracted semigroup determinants", cmd_det, true},
      {"factor", "Factor the determinant over idempotents", cmd_factor, true},
      {"verify-smooth", "Check lll-smoothness", cmd_verify_smooth, true},
      {"verify-pseudo", "Check pseudo <<-transitivity", cmd_verify_pseudo, true},
      {"witness", "Find s, t with s^* != t^+ and s*t != 0", cmd_witness, true},
      {"verify-conjecture", "Check pseudo <<-transitivity over many tables",
       cmd_verify_conjecture, false},
  };

  int (*selected)(const Options&) = nullptr;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.takes_file) sub->add_option("file", o.file, "Table file")->required();
    sub->add_flag("--json", o.json, "Emit a JSON report");
    sub->add_option("--format", o.format, "Table layout")
        ->check(CLI::IsMember({"paper", "plain"}));
    sub->add_option("--max-dim", o.max_dim, "Largest determinant dimension");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (!c.takes_file) {
      sub->add_option("--order", o.order, "Semigroup order")->check(CLI::Range(1, 8));
      sub->add_option("--seed", o.seed, "Sampling seed");
      sub->add_option("--samples", o.samples, "Random samples instead of exhaustion");
    }
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    return selected(o);
  } catch (const MalformedTable& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const NotAssociative& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const OrderTooLarge& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const DimensionCap& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const NoZeroElement& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  }
  return kInputError;
}
