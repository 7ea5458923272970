#include "proofid/harness.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json_codec.hpp"
#include "proofid/conjdisj_rewrite.hpp"
#include "proofid/error.hpp"
#include "proofid/generality.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/parse.hpp"
#include "proofid/render.hpp"

namespace proofid {

using Clock = std::chrono::steady_clock;

bool Report::same_content(const Report& o) const {
  if (title != o.title || checked_pairs != o.checked_pairs || notes != o.notes) return false;
  if (violations.size() != o.violations.size() || witnesses.size() != o.witnesses.size()) return false;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& a = violations[i];
    const auto& b = o.violations[i];
    if (a.f != b.f || a.g != b.g || a.verdict_norm != b.verdict_norm || a.verdict_gen != b.verdict_gen) return false;
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& a = witnesses[i];
    const auto& b = o.witnesses[i];
    if (a.lhs != b.lhs || a.rhs != b.rhs || a.note != b.note || a.depth != b.depth) return false;
  }
  return true;
}

namespace {

const char* verdict(bool equal) { return equal ? "equal" : "different"; }

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

}  // namespace

std::string render_text(const Report& r, bool with_timing) {
  std::ostringstream out;
  if (!r.title.empty()) out << r.title << "\n";
  for (const auto& [k, v] : r.notes) out << k << ": " << v << "\n";
  out << "checked pairs: " << r.checked_pairs << "\n";
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    out << "  " << v.f << "  vs  " << v.g << "  norm=" << verdict(v.verdict_norm)
        << " gen=" << verdict(v.verdict_gen) << "\n";
  }
  out << "witnesses: " << r.witnesses.size() << "\n";
  for (const auto& w : r.witnesses) {
    out << "  [depth " << w.depth << "] " << w.lhs << " = " << w.rhs;
    if (!w.note.empty()) out << "  (" << w.note << ")";
    out << "\n";
  }
  if (with_timing) out << "elapsed ms: " << millis(r.elapsed) << "\n";
  return out.str();
}

std::string render_structured(const Report& r, bool with_timing) {
  detail::Json j;
  j["title"] = r.title;
  j["checkedPairs"] = r.checked_pairs;
  j["violations"] = detail::Json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back(
        {{"f", v.f}, {"g", v.g}, {"verdictNorm", v.verdict_norm}, {"verdictGen", v.verdict_gen}});
  }
  j["witnesses"] = detail::Json::array();
  for (const auto& w : r.witnesses) {
    j["witnesses"].push_back({{"lhs", w.lhs}, {"rhs", w.rhs}, {"note", w.note}, {"depth", w.depth}});
  }
  j["notes"] = detail::Json::object();
  for (const auto& [k, v] : r.notes) j["notes"][k] = v;
  if (with_timing) j["elapsedMs"] = millis(r.elapsed);
  return j.dump(2);
}

// ---- coherence ------------------------------------------------------------

namespace {

struct Classified {
  ArrowTerm term;
  std::string ref;
  std::string gen;
};

// Compares the two partitions of one hom-set. A violation is emitted the
// first time a reference class meets a second generality class, and vice
// versa; the partitions coincide iff nothing is emitted.
void compare_partitions(const std::vector<Classified>& hom, Report& report) {
  std::unordered_map<std::string, std::size_t> ref_rep;
  std::unordered_map<std::string, std::size_t> gen_rep;
  std::unordered_set<std::string> reported;
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const auto& x = hom[i];
    auto [rit, rnew] = ref_rep.emplace(x.ref, i);
    if (!rnew && hom[rit->second].gen != x.gen && reported.insert("r|" + x.ref + "|" + x.gen).second) {
      report.violations.push_back({render(hom[rit->second].term), render(x.term), true, false});
    }
    auto [git, gnew] = gen_rep.emplace(x.gen, i);
    if (!gnew && hom[git->second].ref != x.ref && reported.insert("g|" + x.gen + "|" + x.ref).second) {
      report.violations.push_back({render(hom[git->second].term), render(x.term), false, true});
    }
  }
}

}  // namespace

Report check_star(const EnumConfig& cfg) {
  cfg.validate();
  if (cfg.fragment != Fragment::Cart && cfg.fragment != Fragment::ConjDisj) {
    throw FragmentError("check_star supports cart and conjdisj, not " + std::string(to_string(cfg.fragment)));
  }
  if (cfg.dedup_by_normal_form) throw PreconditionError("check_star needs the full enumeration");
  const auto start = Clock::now();
  const bool cart = cfg.fragment == Fragment::Cart;

  Report report;
  report.title = "coherence check (" + std::string(to_string(cfg.fragment)) + ")";
  Enumerator e(cfg);
  std::uint64_t terms = 0;
  std::uint64_t hom_sets = 0;
  std::uint64_t ref_classes = 0;
  std::uint64_t comparisons = 0;
  std::size_t largest = 0;

  for (const auto& dom : e.universe()) {
    ConjDisjRewriter rewriter;
    std::map<Formula, std::vector<Classified>> by_cod;
    for (std::size_t s = 1; s <= cfg.max_term_size; ++s) {
      const bool last = s == cfg.max_term_size;
      e.for_each_from(dom, s, [&](const TypedArrow& t) {
        auto& hom = by_cod[t.cod];
        if (hom.size() >= cfg.max_terms_per_hom_set) {
          throw BoundError("hom-set " + render(dom) + " => " + render(t.cod) + " exceeds " +
                           std::to_string(cfg.max_terms_per_hom_set) + " terms");
        }
        std::string ref;
        std::string gen;
        if (cart) {
          ref = last ? e.normalization().transient_key(t.term) : e.normalization().key(t.term);
          gen = render(interp_function(t.term));
        } else {
          ref = rewriter.key(t.term);
          gen = render(interp_relation(t.term));
        }
        hom.push_back({t.term, std::move(ref), std::move(gen)});
      });
    }
    for (const auto& [cod, hom] : by_cod) {
      const std::uint64_t n = hom.size();
      report.checked_pairs += n * (n - 1) / 2;
      // Each term is compared with one representative per partition.
      comparisons += 2 * n;
      if (comparisons > cfg.max_pair_checks) {
        throw BoundError("pair checks exceed " + std::to_string(cfg.max_pair_checks));
      }
      largest = std::max<std::size_t>(largest, n);
      terms += n;
      ++hom_sets;
      std::unordered_set<std::string> classes;
      for (const auto& x : hom) classes.insert(x.ref);
      ref_classes += classes.size();
      compare_partitions(hom, report);
    }
  }
  report.notes.emplace_back("terms", std::to_string(terms));
  report.notes.emplace_back("hom-sets", std::to_string(hom_sets));
  report.notes.emplace_back("reference classes", std::to_string(ref_classes));
  report.notes.emplace_back("largest hom-set", std::to_string(largest));
  report.elapsed = Clock::now() - start;
  return report;
}

// ---- maximality probe -----------------------------------------------------

namespace {

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma) {
  switch (f.kind()) {
    case Connective::Letter: {
      auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case Connective::Top:
    case Connective::Bot:
      return f;
    case Connective::Conj:
      return Formula::conj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Connective::Disj:
      return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Connective::Impl:
      return Formula::impl(substitute(f.left(), sigma), substitute(f.right(), sigma));
  }
  return f;
}

ArrowTerm substitute(const ArrowTerm& t, const std::map<std::string, Formula>& sigma) {
  auto s = [&](const Formula& f) { return substitute(f, sigma); };
  switch (t.kind()) {
    case ArrowKind::Id: return ArrowTerm::id(s(t.a()));
    case ArrowKind::Bang: return ArrowTerm::bang(s(t.a()));
    case ArrowKind::Proj1: return ArrowTerm::proj1(s(t.a()), s(t.b()));
    case ArrowKind::Proj2: return ArrowTerm::proj2(s(t.a()), s(t.b()));
    case ArrowKind::Inj1: return ArrowTerm::inj1(s(t.a()), s(t.b()));
    case ArrowKind::Inj2: return ArrowTerm::inj2(s(t.a()), s(t.b()));
    case ArrowKind::Eval: return ArrowTerm::eval(s(t.a()), s(t.b()));
    case ArrowKind::Zero: return ArrowTerm::zero(s(t.a()), s(t.b()));
    case ArrowKind::Comp: return ArrowTerm::comp(substitute(t.first(), sigma), substitute(t.second(), sigma));
    case ArrowKind::Pair: return ArrowTerm::pair(substitute(t.first(), sigma), substitute(t.second(), sigma));
    case ArrowKind::Copair: return ArrowTerm::copair(substitute(t.first(), sigma), substitute(t.second(), sigma));
    case ArrowKind::Sum: return ArrowTerm::sum(substitute(t.first(), sigma), substitute(t.second(), sigma));
    case ArrowKind::Curry: return ArrowTerm::curry(substitute(t.first(), sigma));
  }
  return t;
}

void collect_letters(const ArrowTerm& t, std::vector<std::string>& out) {
  auto add = [&](const Formula& f) {
    for (auto& l : letters(f)) {
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  };
  if (t.is_primitive()) {
    add(t.a());
    if (t.kind() != ArrowKind::Id && t.kind() != ArrowKind::Bang) add(t.b());
    return;
  }
  collect_letters(t.first(), out);
  if (t.arity() == 2) collect_letters(t.second(), out);
}

// Union-find over normalization classes of enumerated terms.
class Classes {
 public:
  struct Node {
    ArrowTerm rep;
    ArrowType type;
    std::string gen;
  };

  std::optional<std::size_t> find_key(const std::string& key) const {
    auto it = ids_.find(key);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t add(const std::string& key, const ArrowTerm& t, const ArrowType& type) {
    if (auto id = find_key(key)) return *id;
    std::size_t id = nodes_.size();
    ids_.emplace(key, id);
    nodes_.push_back({t, type, render(interp_function(t))});
    parent_.push_back(id);
    return id;
  }

  std::size_t root(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // True if two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  const Node& node(std::size_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> parent_;
};

}  // namespace

Report probe_maximality(const ArrowTerm& f, const ArrowTerm& g, const EnumConfig& cfg_in, std::size_t depth) {
  EnumConfig cfg = cfg_in;
  cfg.fragment = Fragment::Cart;
  cfg.dedup_by_normal_form = false;
  cfg.validate();
  try {
    check_fragment(f, Fragment::Cart);
    check_fragment(g, Fragment::Cart);
  } catch (const FragmentError& e) {
    throw PreconditionError(std::string("seed must lie in cart: ") + e.what());
  }
  const ArrowType type = infer_type(f);
  if (!(infer_type(g) == type)) throw PreconditionError("seed sides have different types");
  if (equal_by_generality(f, g, Fragment::Cart)) throw PreconditionError("seed is already a theorem");

  const auto start = Clock::now();
  Report report;
  report.title = "maximality probe: " + render(f) + " = " + render(g);

  Enumerator e(cfg);
  auto& norm = e.normalization();
  Classes classes;
  std::map<Formula, std::vector<TypedArrow>> by_dom;
  std::map<Formula, std::vector<ArrowTerm>> by_cod;
  std::map<std::pair<Formula, Formula>, std::vector<std::size_t>> hom_sets;
  for (const auto& dom : e.universe()) {
    for (std::size_t s = 1; s <= cfg.max_term_size; ++s) {
      for (const auto& t : e.from(dom, s)) {
        by_dom[dom].push_back(t);
        by_cod[t.cod].push_back(t.term);
        auto id = classes.add(norm.key(t.term), t.term, ArrowType{dom, t.cod});
        auto& hs = hom_sets[{dom, t.cod}];
        if (std::find(hs.begin(), hs.end(), id) == hs.end()) hs.push_back(id);
      }
    }
  }

  std::uint64_t budget = cfg.max_pair_checks;
  auto spend = [&] {
    if (budget-- == 0) throw BoundError("probe exceeds " + std::to_string(cfg.max_pair_checks) + " derived equations");
  };

  using Equation = std::pair<std::size_t, std::size_t>;
  std::vector<Equation> frontier;
  auto record = [&](std::size_t a, std::size_t b, std::size_t d, const std::string& note) {
    if (!classes.unite(a, b)) return;
    frontier.emplace_back(a, b);
    const auto& na = classes.node(a);
    const auto& nb = classes.node(b);
    if (na.gen != nb.gen) report.witnesses.push_back({render(na.rep), render(nb.rep), note, d});
  };

  // Depth 0: the seed and its substitution instances.
  const std::size_t seed_f = classes.add(norm.transient_key(f), f, type);
  const std::size_t seed_g = classes.add(norm.transient_key(g), g, type);
  classes.unite(seed_f, seed_g);
  frontier.emplace_back(seed_f, seed_g);

  std::vector<std::string> seed_letters;
  collect_letters(f, seed_letters);
  collect_letters(g, seed_letters);
  std::vector<std::size_t> choice(seed_letters.size(), 0);
  const auto& universe = e.universe();
  while (!seed_letters.empty()) {
    std::map<std::string, Formula> sigma;
    for (std::size_t i = 0; i < seed_letters.size(); ++i) sigma.emplace(seed_letters[i], universe[choice[i]]);
    Formula dom = substitute(type.dom, sigma);
    Formula cod = substitute(type.cod, sigma);
    if (cfg.admits(dom) && cfg.admits(cod)) {
      spend();
      auto a = classes.find_key(norm.transient_key(substitute(f, sigma)));
      auto b = classes.find_key(norm.transient_key(substitute(g, sigma)));
      if (a && b) record(*a, *b, 0, "substitution instance");
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == universe.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }

  std::map<std::pair<Formula, Formula>, bool> collapsed;
  auto check_collapse = [&](std::size_t d) {
    for (const auto& [hom, ids] : hom_sets) {
      if (collapsed[hom]) continue;
      std::size_t r = classes.root(ids.front());
      std::optional<std::size_t> other;
      bool all = true;
      for (auto id : ids) {
        if (classes.root(id) != r) {
          all = false;
          break;
        }
        if (!other && classes.node(id).gen != classes.node(ids.front()).gen) other = id;
      }
      if (all && other) {
        collapsed[hom] = true;
        report.witnesses.push_back({render(classes.node(ids.front()).rep), render(classes.node(*other).rep),
                                    "hom-set collapse at " + render(hom.first) + " => " + render(hom.second) +
                                        " (" + std::to_string(ids.size()) + " classes)",
                                    d});
      }
    }
  };
  check_collapse(0);

  std::size_t derived = 0;
  for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<Equation> current;
    current.swap(frontier);
    for (auto [a, b] : current) {
      const ArrowTerm l = classes.node(a).rep;
      const ArrowTerm r = classes.node(b).rep;
      const ArrowType t = classes.node(a).type;
      auto derive = [&](const ArrowTerm& x, const ArrowTerm& y, const char* how) {
        spend();
        ++derived;
        auto xa = classes.find_key(norm.transient_key(x));
        auto ya = classes.find_key(norm.transient_key(y));
        if (xa && ya) record(*xa, *ya, d, how);
      };
      for (const auto& h : by_dom[t.cod]) derive(ArrowTerm::comp(h.term, l), ArrowTerm::comp(h.term, r), "post-composition");
      for (const auto& k : by_cod[t.dom]) derive(ArrowTerm::comp(l, k), ArrowTerm::comp(r, k), "pre-composition");
      for (const auto& h : by_dom[t.dom]) {
        if (!cfg.admits(Formula::conj(t.cod, h.cod))) continue;
        derive(ArrowTerm::pair(l, h.term), ArrowTerm::pair(r, h.term), "pairing");
        derive(ArrowTerm::pair(h.term, l), ArrowTerm::pair(h.term, r), "pairing");
      }
    }
    check_collapse(d);
  }

  std::size_t collapsed_count = 0;
  for (const auto& [hom, c] : collapsed) collapsed_count += c ? 1 : 0;
  report.notes.emplace_back("enumerated classes", std::to_string(classes.size()));
  report.notes.emplace_back("derived equations", std::to_string(derived));
  report.notes.emplace_back("collapsed hom-sets", std::to_string(collapsed_count));
  report.elapsed = Clock::now() - start;
  return report;
}

// ---- demos ----------------------------------------------------------------

Report demo_ccc_divergence() {
  const auto start = Clock::now();
  Report report;
  report.title = "ccc divergence";
  auto t1 = parse_lambda("(\\x:(p->p). (x, x)) (\\y:p. y)");
  auto t2 = parse_lambda("(\\y:p. y, \\z:p. z)");
  auto n1 = alpha_canonical(normalize(t1));
  auto n2 = alpha_canonical(normalize(t2));
  auto ty1 = principal_type(t1).principal_type;
  auto ty2 = principal_type(t2).principal_type;
  const bool norm_equal = n1 == n2;
  const bool types_equivalent = renaming_equivalent(ty1, ty2);
  report.checked_pairs = 1;
  report.notes.emplace_back("t1", render(t1));
  report.notes.emplace_back("t2", render(t2));
  report.notes.emplace_back("normal form t1", render(n1));
  report.notes.emplace_back("normal form t2", render(n2));
  report.notes.emplace_back("norm", verdict(norm_equal));
  report.notes.emplace_back("principal type t1", render(ty1));
  report.notes.emplace_back("principal type t2", render(ty2));
  report.notes.emplace_back("types", types_equivalent ? "renaming-equivalent" : "differ");
  if (norm_equal && !types_equivalent) {
    report.witnesses.push_back({render(t1), render(t2), "beta-eta equal, principal types differ", 0});
  } else {
    report.violations.push_back({render(t1), render(t2), norm_equal, types_equivalent});
  }
  report.elapsed = Clock::now() - start;
  return report;
}

namespace {

// Compares the expected verdicts on a pair of arrow terms.
void expect_pair(Report& report, const std::string& label, const ArrowTerm& f, const ArrowTerm& g,
                 bool norm, bool expected_norm, bool gen, bool expected_gen) {
  ++report.checked_pairs;
  report.notes.emplace_back(label, render(f) + " vs " + render(g) + ": norm=" + verdict(norm) +
                                       " gen=" + verdict(gen));
  if (norm != expected_norm || gen != expected_gen) report.violations.push_back({render(f), render(g), norm, gen});
}

Report demo_projections() {
  Report report;
  report.title = "projections";
  auto p1 = parse_arrow("p1[p,p]");
  auto p2 = parse_arrow("p2[p,p]");
  report.notes.emplace_back("graph p1[p,p]", render(interp_function(p1)));
  report.notes.emplace_back("graph p2[p,p]", render(interp_function(p2)));
  expect_pair(report, "projections", p1, p2, equal_by_normalization(p1, p2), false,
              equal_by_generality(p1, p2), false);
  auto lhs = parse_arrow("comp(p1[p,p],pair(id[p],id[p]))");
  auto rhs = parse_arrow("id[p]");
  expect_pair(report, "diagonal", lhs, rhs, equal_by_normalization(lhs, rhs), true,
              equal_by_generality(lhs, rhs), true);
  return report;
}

Report demo_injection_generalization() {
  Report report;
  report.title = "injection generalization";
  auto lhs = parse_arrow(
      "comp(case(comp(i1[q,p&p],id[q]),comp(i2[q,p&p],pair(id[p],id[p]))),i1[q,p])", Fragment::ConjDisj);
  auto rhs = parse_arrow("i1[q,p&p]", Fragment::ConjDisj);
  report.notes.emplace_back("relation lhs", render(interp_relation(lhs)));
  report.notes.emplace_back("relation rhs", render(interp_relation(rhs)));
  expect_pair(report, "equation", lhs, rhs, equal_by_rewriting(lhs, rhs), true,
              interp_relation(lhs) == interp_relation(rhs), true);
  return report;
}

Report demo_difunctional_composition() {
  Report report;
  report.title = "difunctional composition";
  auto w = find_difunctional_noncomposition_witness(3);
  if (!w) {
    report.violations.push_back({"none", "none", false, false});
    report.notes.emplace_back("witness", "none up to size 3");
    return report;
  }
  report.notes.emplace_back("first", render(w->first) + (is_difunctional(w->first) ? " difunctional" : ""));
  report.notes.emplace_back("second", render(w->second) + (is_difunctional(w->second) ? " difunctional" : ""));
  report.notes.emplace_back("composite", render(w->composite) +
                                             (is_difunctional(w->composite) ? " difunctional" : " not difunctional"));
  report.witnesses.push_back({render(w->first), render(w->second), "composite is not difunctional", 0});
  return report;
}

Report demo_matrix_sum() {
  Report report;
  report.title = "matrix sum";
  auto p1 = parse_arrow("p1[p,p]");
  auto p2 = parse_arrow("p2[p,p]");
  auto sum = parse_arrow("sum(p1[p,p],p2[p,p])", Fragment::Matrix);
  report.notes.emplace_back("matrix sum", render(interp_matrix(sum)));
  report.notes.emplace_back("matrix p1", render(interp_matrix(p1)));
  report.notes.emplace_back("matrix p2", render(interp_matrix(p2)));
  for (const auto& p : {p1, p2}) {
    ++report.checked_pairs;
    bool gen = equal_by_generality(sum, p, Fragment::Matrix);
    report.notes.emplace_back("sum vs " + render(p), verdict(gen));
    if (gen) report.violations.push_back({render(sum), render(p), gen, gen});
  }
  return report;
}

Report demo_zero_proof() {
  Report report;
  report.title = "zero proof";
  const std::vector<std::pair<std::string, std::string>> equations{
      {"comp(zero[p,q],p1[p,p])", "zero[p&p,q]"},
      {"comp(p1[q,q],zero[p,q&q])", "zero[p,q]"},
      {"sum(p1[p,p],zero[p&p,p])", "p1[p,p]"},
  };
  report.notes.emplace_back("matrix zero[p,q]", render(interp_matrix(parse_arrow("zero[p,q]"))));
  for (const auto& [l, r] : equations) {
    auto lhs = parse_arrow(l, Fragment::Matrix);
    auto rhs = parse_arrow(r, Fragment::Matrix);
    ++report.checked_pairs;
    bool gen = equal_by_generality(lhs, rhs, Fragment::Matrix);
    report.notes.emplace_back(l + " vs " + r, verdict(gen));
    if (!gen) report.violations.push_back({l, r, gen, gen});
  }
  return report;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"projections", "ccc-divergence", "injection-generalization",
          "difunctional-composition", "matrix-sum", "zero-proof"};
}

Report run_demo(const std::string& name) {
  const auto start = Clock::now();
  Report r;
  if (name == "projections") r = demo_projections();
  else if (name == "ccc-divergence") return demo_ccc_divergence();
  else if (name == "injection-generalization") r = demo_injection_generalization();
  else if (name == "difunctional-composition") r = demo_difunctional_composition();
  else if (name == "matrix-sum") r = demo_matrix_sum();
  else if (name == "zero-proof") r = demo_zero_proof();
  else throw PreconditionError("unknown demo '" + name + "'");
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace proofid
