#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "proofid/enumerate.hpp"
#include "proofid/error.hpp"
#include "proofid/generality.hpp"
#include "proofid/harness.hpp"
#include "proofid/health.hpp"
#include "proofid/iso.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/conjdisj_rewrite.hpp"
#include "proofid/parse.hpp"
#include "proofid/render.hpp"
#include "proofid/structured.hpp"

namespace proofid::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "text";
  bool timing = false;

  // parse
  std::string parse_kind;
  std::string parse_text;
  bool from_structured = false;

  // shared term / formula arguments
  std::vector<std::string> terms;
  std::string fragment;
  std::string expect;

  // normalize
  std::string strategy = "eager";
  bool lambda_input = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 10'000;

  // principal-type
  bool trace = false;

  // graph
  bool support = false;
  bool decompose = false;

  // eq
  std::string by = "norm";
  std::string file;

  // iso
  std::optional<std::size_t> witness_bound;

  // enumeration-driven verbs
  std::size_t size = 7;
  std::string letters = "p,q";
  std::size_t connectives = 3;
  bool dedup = false;
  std::size_t depth = 3;
  std::size_t max_terms = EnumConfig{}.max_terms_per_hom_set;
  std::size_t max_pair_checks = EnumConfig{}.max_pair_checks;

  // demo
  std::string demo;
};

bool structured(const Options& o) { return o.format == "structured"; }

Json tree(const std::string& encoded) { return Json::parse(encoded); }

std::vector<std::string> split_letters(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Fragment fragment_or(const std::string& s, Fragment fallback) {
  if (s.empty()) return fallback;
  auto f = fragment_from_string(s);
  if (!f) throw UsageError("unknown fragment '" + s + "'");
  return *f;
}

std::optional<Fragment> optional_fragment(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return fragment_or(s, Fragment::Cart);
}

Strategy strategy_from(const std::string& s) {
  if (s == "eager") return Strategy::Eager;
  if (s == "normal") return Strategy::NormalOrder;
  if (s == "applicative") return Strategy::Applicative;
  throw UsageError("unknown strategy '" + s + "'");
}

// Accepts a bare tree or the {"term": ...} envelope printed by `parse`.
std::string unwrap_term(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_object() && !j.contains("kind") && j.contains("term")) return j["term"].dump();
  return text;
}

ArrowTerm arrow_arg(const std::string& text, const Options& o) {
  if (o.from_structured) {
    ArrowTerm t = arrow_from_structured(unwrap_term(text));
    infer_type(t);
    if (auto f = optional_fragment(o.fragment)) check_fragment(t, *f);
    return t;
  }
  return parse_arrow(text, optional_fragment(o.fragment));
}

EnumConfig enum_config(const Options& o, Fragment fallback) {
  EnumConfig cfg;
  cfg.fragment = fragment_or(o.fragment, fallback);
  cfg.letter_pool = split_letters(o.letters);
  cfg.max_formula_connectives = o.connectives;
  cfg.max_term_size = o.size;
  cfg.dedup_by_normal_form = o.dedup;
  cfg.max_terms_per_hom_set = o.max_terms;
  cfg.max_pair_checks = o.max_pair_checks;
  return cfg;
}

int print_report(const Report& r, const Options& o, std::ostream& out) {
  out << (structured(o) ? render_structured(r, o.timing) + "\n" : render_text(r, o.timing));
  return r.holds() ? 0 : 1;
}

// Exit status for a verdict checked against --expect.
int verdict_status(bool equal, const Options& o) {
  if (o.expect.empty()) return 0;
  if (o.expect == "equal") return equal ? 0 : 1;
  if (o.expect == "different") return equal ? 1 : 0;
  throw UsageError("--expect takes equal or different");
}

// ---- verbs ----------------------------------------------------------------

int cmd_parse(const Options& o, std::ostream& out) {
  const std::string& text = o.parse_text;
  if (o.parse_kind == "formula") {
    Formula f = o.from_structured ? formula_from_structured(text) : parse_formula(text);
    if (structured(o)) {
      out << to_structured(f) << "\n";
    } else {
      out << render(f) << "\n";
    }
    return 0;
  }
  if (o.parse_kind == "arrow") {
    ArrowTerm t = arrow_arg(text, o);
    ArrowType ty = infer_type(t);
    Fragment fr = smallest_fragment(t);
    if (structured(o)) {
      Json j;
      j["term"] = tree(to_structured(t));
      j["dom"] = tree(to_structured(ty.dom));
      j["cod"] = tree(to_structured(ty.cod));
      j["fragment"] = std::string(to_string(fr));
      j["size"] = t.size();
      out << j.dump(2) << "\n";
    } else {
      out << render(t) << "\n"
          << "type: " << render(ty) << "\n"
          << "fragment: " << to_string(fr) << "\n"
          << "size: " << t.size() << "\n";
    }
    return 0;
  }
  if (o.parse_kind == "lambda") {
    LambdaTerm t = o.from_structured ? lambda_from_structured(unwrap_term(text)) : parse_lambda(text);
    Formula ty = type_of(t);
    if (structured(o)) {
      Json j;
      j["term"] = tree(to_structured(t));
      j["type"] = tree(to_structured(ty));
      out << j.dump(2) << "\n";
    } else {
      out << render(t) << "\n" << "type: " << render(ty) << "\n";
    }
    return 0;
  }
  throw UsageError("parse takes formula, arrow or lambda");
}

int cmd_normalize(const Options& o, std::ostream& out) {
  if (o.seed) {
    RandomTermOptions opts;
    opts.letters = split_letters(o.letters);
    HealthReport r = normalizer_health(*o.seed, o.count, opts);
    if (structured(o)) {
      Json j;
      j["terms"] = r.terms;
      j["withRedexes"] = r.redexes_seen;
      j["subjectReductionFailures"] = r.subject_reduction_failures;
      j["idempotenceFailures"] = r.idempotence_failures;
      j["strategyDisagreements"] = r.strategy_failures;
      if (!r.first_failure.empty()) j["firstFailure"] = r.first_failure;
      out << j.dump(2) << "\n";
    } else {
      out << render(r);
    }
    return r.healthy() ? 0 : 1;
  }
  if (o.terms.size() != 1) throw UsageError("normalize takes one term (or --seed)");
  const Strategy s = strategy_from(o.strategy);
  LambdaTerm source = o.lambda_input ? parse_lambda(o.terms[0]) : to_lambda(arrow_arg(o.terms[0], o));
  LambdaTerm beta = beta_normalize(source, s);
  LambdaTerm normal = alpha_canonical(eta_expand(beta));
  if (structured(o)) {
    Json j;
    j["lambda"] = tree(to_structured(source));
    j["betaNormal"] = tree(to_structured(beta));
    j["normalForm"] = tree(to_structured(normal));
    j["type"] = tree(to_structured(type_of(normal)));
    out << j.dump(2) << "\n";
  } else {
    out << "lambda: " << render(source) << "\n"
        << "beta normal: " << render(beta) << "\n"
        << "normal form: " << render(normal) << "\n"
        << "type: " << render(type_of(normal)) << "\n";
  }
  return 0;
}

int cmd_principal_type(const Options& o, std::ostream& out) {
  if (o.terms.size() == 2) {
    // Two formulas: most general unifier.
    Formula a = parse_formula(o.terms[0]);
    Formula b = parse_formula(o.terms[1]);
    ConstraintTrace trace;
    Substitution sigma = unify(a, b, {}, &trace);
    Formula unified = sigma.apply(a);
    if (structured(o)) {
      Json j;
      j["unifier"] = Json::object();
      for (const auto& [v, f] : sigma.bindings()) j["unifier"][v] = tree(to_structured(f));
      j["unified"] = tree(to_structured(unified));
      out << j.dump(2) << "\n";
    } else {
      for (const auto& [v, f] : sigma.bindings()) out << v << " := " << render(f) << "\n";
      out << "unified: " << render(unified) << "\n";
      if (o.trace) {
        for (const auto& [l, r] : trace) out << "  " << render(l) << " = " << render(r) << "\n";
      }
    }
    return 0;
  }
  if (o.terms.size() != 1) throw UsageError("principal-type takes a term, or two formulas to unify");
  LambdaParseOptions popts;
  popts.allow_untyped_binders = true;
  LambdaTerm t = parse_lambda(o.terms[0], popts);
  TypingReport r = principal_type(t);
  if (structured(o)) {
    Json j;
    j["principalType"] = tree(to_structured(r.principal_type));
    j["constraints"] = Json::array();
    for (const auto& [l, rr] : r.constraint_trace) {
      j["constraints"].push_back({tree(to_structured(l)), tree(to_structured(rr))});
    }
    out << j.dump(2) << "\n";
  } else {
    out << render(r.principal_type) << "\n";
    if (o.trace) {
      for (const auto& [l, rr] : r.constraint_trace) out << "  " << render(l) << " = " << render(rr) << "\n";
    }
  }
  return 0;
}

int cmd_graph(const Options& o, std::ostream& out) {
  if (o.terms.size() != 1) throw UsageError("graph takes one term");
  ArrowTerm t = arrow_arg(o.terms[0], o);
  Fragment fr = o.fragment.empty() ? smallest_fragment(t) : fragment_or(o.fragment, Fragment::Cart);
  GraphValue v = interpret(t, fr);
  std::vector<std::string> lines{render(v)};
  if (const auto* m = std::get_if<Matrix>(&v)) {
    if (o.support) {
      Relation s = support(*m);
      lines.push_back("support: " + render(s) + (is_difunctional(s) ? " (difunctional)" : ""));
    }
    if (o.decompose) {
      for (const auto& part : single_entry_decomposition(*m)) lines.push_back("part: " + render(part));
    }
  } else if (const auto* r = std::get_if<Relation>(&v)) {
    if (o.support) lines.push_back(std::string("difunctional: ") + (is_difunctional(*r) ? "yes" : "no"));
  }
  if (structured(o)) {
    Json j;
    j["fragment"] = std::string(to_string(fr));
    j["graph"] = lines.front();
    j["details"] = Json::array();
    for (std::size_t i = 1; i < lines.size(); ++i) j["details"].push_back(lines[i]);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
  }
  return 0;
}

bool equal_by(const std::string& by, const ArrowTerm& f, const ArrowTerm& g, const std::string& fragment) {
  if (by == "norm") return equal_by_normalization(f, g);
  if (by == "gen") {
    if (fragment.empty()) return equal_by_generality(f, g);
    return equal_by_generality(f, g, fragment_or(fragment, Fragment::Cart));
  }
  if (by == "rewrite") return equal_by_rewriting(f, g);
  throw UsageError("--by takes norm, gen or rewrite");
}

int cmd_eq(const Options& o, std::ostream& out) {
  std::vector<std::string> texts = o.terms;
  if (!o.file.empty()) {
    if (!texts.empty()) throw UsageError("eq takes either two terms or --file");
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read '" + o.file + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      auto e = line.find_last_not_of(" \t\r");
      texts.push_back(line.substr(b, e - b + 1));
    }
  }
  if (texts.empty() || texts.size() % 2 != 0) throw UsageError("eq compares terms in pairs");
  int status = 0;
  Json results = Json::array();
  for (std::size_t i = 0; i < texts.size(); i += 2) {
    ArrowTerm f = arrow_arg(texts[i], o);
    ArrowTerm g = arrow_arg(texts[i + 1], o);
    bool equal = equal_by(o.by, f, g, o.fragment);
    status = std::max(status, verdict_status(equal, o));
    if (structured(o)) {
      results.push_back({{"f", render(f)}, {"g", render(g)}, {"by", o.by}, {"verdict", equal ? "equal" : "different"}});
    } else {
      out << (equal ? "equal" : "different") << "\n";
    }
  }
  if (structured(o)) out << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  return status;
}

int cmd_iso(const Options& o, std::ostream& out) {
  if (o.terms.size() != 2) throw UsageError("iso takes two formulas");
  Formula a = parse_formula(o.terms[0]);
  Formula b = parse_formula(o.terms[1]);
  bool iso = iso_check(a, b);
  std::optional<IsoNormalForm> na;
  std::optional<IsoNormalForm> nb;
  if (!contains(a, Connective::Disj) && !contains(a, Connective::Bot) && !contains(b, Connective::Disj) &&
      !contains(b, Connective::Bot)) {
    na = hsi_normal_form(a);
    nb = hsi_normal_form(b);
  } else {
    na = monoid_normal_form(dualize(a));
    nb = monoid_normal_form(dualize(b));
  }
  std::optional<IsoWitness> w;
  if (o.witness_bound) w = find_iso_witness(a, b, *o.witness_bound);
  if (structured(o)) {
    Json j;
    j["isomorphic"] = iso;
    j["normalForms"] = {render(na->canonical), render(nb->canonical)};
    if (o.witness_bound) {
      j["witness"] = w ? Json{{"forward", render(w->forward)}, {"backward", render(w->backward)}} : Json(nullptr);
    }
    out << j.dump(2) << "\n";
  } else {
    out << (iso ? "isomorphic" : "not isomorphic") << "\n"
        << "normal forms: " << render(na->canonical) << " | " << render(nb->canonical) << "\n";
    if (o.witness_bound) {
      if (w) {
        out << "witness: " << render(w->forward) << " / " << render(w->backward) << "\n";
      } else {
        out << "witness: none up to size " << *o.witness_bound << "\n";
      }
    }
  }
  return verdict_status(iso, o);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.terms.size() != 2) throw UsageError("enumerate takes a domain and a codomain");
  EnumConfig cfg = enum_config(o, Fragment::Cart);
  auto terms = enumerate_arrows(cfg, parse_formula(o.terms[0]), parse_formula(o.terms[1]));
  if (structured(o)) {
    Json j = Json::array();
    for (const auto& t : terms) j.push_back(render(t));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& t : terms) out << render(t) << "\n";
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  return print_report(check_star(enum_config(o, Fragment::Cart)), o, out);
}

int cmd_probe(const Options& o, std::ostream& out) {
  if (o.terms.size() != 2) throw UsageError("probe-maximality takes the two sides of a seed equation");
  Options local = o;
  local.fragment = "cart";
  ArrowTerm f = arrow_arg(o.terms[0], local);
  ArrowTerm g = arrow_arg(o.terms[1], local);
  return print_report(probe_maximality(f, g, enum_config(local, Fragment::Cart), o.depth), o, out);
}

int cmd_demo(const Options& o, std::ostream& out) { return print_report(run_demo(o.demo), o, out); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identity of proofs: normalization, generality and isomorphism checks", "proofid"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output encoding")->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_bounds = [&](CLI::App* c, std::size_t size, const std::string& letters, std::size_t conn) {
    o.size = size;
    o.letters = letters;
    o.connectives = conn;
    c->add_option("--size", o.size, "Maximum term size (constructor count)")->capture_default_str();
    c->add_option("--letters", o.letters, "Comma-separated letter pool")->capture_default_str();
    c->add_option("--connectives", o.connectives, "Maximum connectives per formula")->capture_default_str();
    c->add_option("--max-terms", o.max_terms, "Cap on terms per hom-set")->capture_default_str();
    c->add_option("--max-pair-checks", o.max_pair_checks, "Cap on pair checks")->capture_default_str();
  };

  auto* parse = app.add_subcommand("parse", "Parse and check a formula, arrow term or lambda term");
  parse->add_option("kind", o.parse_kind, "formula | arrow | lambda")->required();
  parse->add_option("text", o.parse_text, "Input text")->required();
  parse->add_flag("--from-structured", o.from_structured, "Read the structured tree encoding");
  parse->add_option("--fragment", o.fragment, "Require the arrow term to lie in this fragment");
  add_format(parse);

  auto* normalize_cmd = app.add_subcommand("normalize", "Translate to lambda and compute the long normal form");
  normalize_cmd->add_option("term", o.terms, "Arrow term (or lambda term with --lambda)");
  normalize_cmd->add_flag("--lambda", o.lambda_input, "Input is a lambda term");
  normalize_cmd->add_option("--strategy", o.strategy, "eager | normal | applicative")->capture_default_str();
  normalize_cmd->add_option("--seed", o.seed, "Run the normalizer health check on random terms");
  normalize_cmd->add_option("--count", o.count, "Random terms for --seed")->capture_default_str();
  normalize_cmd->add_option("--letters", o.letters, "Letters for random types")->capture_default_str();
  add_format(normalize_cmd);

  auto* pt = app.add_subcommand("principal-type", "Principal type of a term skeleton, or unifier of two formulas");
  pt->add_option("input", o.terms, "Lambda skeleton, or two formulas")->required();
  pt->add_flag("--trace", o.trace, "Print the constraint trace");
  add_format(pt);

  auto* graph = app.add_subcommand("graph", "Generality graph of an arrow term");
  graph->add_option("term", o.terms, "Arrow term")->required();
  graph->add_option("--fragment", o.fragment, "Graphical category to interpret in");
  graph->add_flag("--support", o.support, "Also print the support relation (matrices)");
  graph->add_flag("--decompose", o.decompose, "Also print the single-entry decomposition (matrices)");
  add_format(graph);

  auto* eq = app.add_subcommand("eq", "Compare arrow terms");
  eq->add_option("terms", o.terms, "Two arrow terms");
  eq->add_option("--by", o.by, "norm | gen | rewrite")->capture_default_str();
  eq->add_option("--expect", o.expect, "Exit 1 unless every verdict matches (equal | different)");
  eq->add_option("--file", o.file, "Read terms one per line; consecutive lines are compared");
  eq->add_option("--fragment", o.fragment, "Fragment the terms must lie in");
  add_format(eq);

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two formulas");
  iso->add_option("formulas", o.terms, "Two formulas")->required();
  iso->add_option("--witness", o.witness_bound, "Also search for inverse arrows up to this size");
  iso->add_option("--expect", o.expect, "Exit 1 unless the verdict matches (equal | different)");
  add_format(iso);

  auto* enumerate = app.add_subcommand("enumerate", "List the arrow terms of a hom-set");
  enumerate->add_option("types", o.terms, "Domain and codomain")->required();
  enumerate->add_option("--fragment", o.fragment, "cart | conjdisj | ccc | matrix");
  enumerate->add_flag("--dedup", o.dedup, "One representative per normalization class");
  add_bounds(enumerate, 7, "p,q", 3);
  add_format(enumerate);

  auto* check = app.add_subcommand("check-coherence", "Compare normalization with generality on all enumerated pairs");
  check->add_option("--fragment", o.fragment, "cart | conjdisj");
  add_bounds(check, 7, "p,q", 3);
  check->add_flag("--timing", o.timing, "Report elapsed time");
  add_format(check);

  auto* probe = app.add_subcommand("probe-maximality", "Close a non-theorem under congruence and report collapse");
  probe->add_option("sides", o.terms, "The two sides of the seed equation")->required();
  probe->add_option("--depth", o.depth, "Congruence depth")->capture_default_str();
  add_bounds(probe, 5, "p", 2);
  probe->add_flag("--timing", o.timing, "Report elapsed time");
  add_format(probe);

  auto* demo = app.add_subcommand("demo", "Run a worked example");
  demo->add_option("name", o.demo, "Demo name")->required()->check(CLI::IsMember(demo_names()));
  add_format(demo);

  // Bounds differ per verb; add_bounds above set the last defaults, so
  // reset to the verb's defaults before parsing.
  o.size = 7;
  o.letters = "p,q";
  o.connectives = 3;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (probe->parsed()) {
    if (probe->count("--size") == 0) o.size = 5;
    if (probe->count("--letters") == 0) o.letters = "p";
    if (probe->count("--connectives") == 0) o.connectives = 2;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (normalize_cmd->parsed()) return cmd_normalize(o, out);
    if (pt->parsed()) return cmd_principal_type(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (iso->parsed()) return cmd_iso(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
    if (demo->parsed()) return cmd_demo(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace proofid::cli
