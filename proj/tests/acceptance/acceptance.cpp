// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <algorithm>
#include <string>
#include <vector>

#include "proofid/enumerate.hpp"
#include "proofid/error.hpp"
#include "proofid/generality.hpp"
#include "proofid/harness.hpp"
#include "proofid/health.hpp"
#include "proofid/iso.hpp"
#include "proofid/parse.hpp"
#include "proofid/render.hpp"

using namespace proofid;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;
std::set<int> selected;

void criterion(int n, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  if (!selected.empty() && !selected.count(n)) return;
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += " [over time limit]";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s  (%.1fs / %.0fs)  %s\n", n, o.pass ? "PASS" : "FAIL", name.c_str(), secs,
              limit_s, o.detail.c_str());
  std::fflush(stdout);
}

std::string note(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.notes) {
    if (k == key) return v;
  }
  return "";
}

EnumConfig star_config(Fragment fr) {
  EnumConfig cfg;
  cfg.fragment = fr;
  cfg.letter_pool = {"p", "q"};
  cfg.max_formula_connectives = 3;
  cfg.max_term_size = 7;
  return cfg;
}

// The conj-disj run needs about 1.4e7 comparisons, above the default cap.
Outcome coherence(Fragment fr) {
  EnumConfig cfg = star_config(fr);
  cfg.max_pair_checks = 100'000'000;
  Report r = check_star(cfg);
  std::string d = "pairs=" + std::to_string(r.checked_pairs) + " terms=" + note(r, "terms") +
                  " violations=" + std::to_string(r.violations.size());
  if (!r.holds()) d += " first: " + r.violations.front().f + " vs " + r.violations.front().g;
  return {r.holds() && r.checked_pairs > 0, d};
}

Outcome probes() {
  EnumConfig cfg;
  cfg.fragment = Fragment::Cart;
  cfg.letter_pool = {"p"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 5;
  const std::vector<std::pair<std::string, std::string>> seeds{
      {"pair(p2[p,p],p1[p,p])", "id[p & p]"},
      {"pair(p1[p,p],p1[p,p])", "id[p & p]"},
      {"p1[p,p]", "p2[p,p]"},
  };
  Outcome out{true, ""};
  for (const auto& [f, g] : seeds) {
    const auto start = Clock::now();
    Report r = probe_maximality(parse_arrow(f), parse_arrow(g), cfg, 3);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const Witness* hit = nullptr;
    for (const auto& w : r.witnesses) {
      bool proj = (w.lhs == "p1[p,p]" && w.rhs == "p2[p,p]") || (w.lhs == "p2[p,p]" && w.rhs == "p1[p,p]");
      if (proj || w.note.rfind("hom-set collapse", 0) == 0) {
        hit = &w;
        break;
      }
    }
    bool ok = hit && hit->depth <= 3 && secs < 60.0;
    out.pass = out.pass && ok;
    char buf[64];
    std::snprintf(buf, sizeof buf, " (depth %zu, %.1fs);", hit ? hit->depth : 0, secs);
    out.detail += f + "=" + g + ": " + (hit ? hit->lhs + " = " + hit->rhs : std::string("no witness")) + buf;
  }
  return out;
}

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const {
    std::size_t h = m.rows() * 31 + m.cols();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) h = h * 1'000'003 + static_cast<std::size_t>(m.at(r, c));
    }
    return h;
  }
};

Outcome matrix_laws() {
  EnumConfig cfg;
  cfg.fragment = Fragment::Matrix;
  cfg.letter_pool = {"p", "q"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 6;
  Enumerator e(cfg);
  GraphCache graphs;
  // Distinct matrices per hom-set, keyed by (dom, cod).
  std::map<std::pair<Formula, Formula>, std::unordered_set<Matrix, MatrixHash>> distinct;
  std::uint64_t terms = 0;
  std::uint64_t law_checks = 0;
  std::string bad;
  auto fail = [&](const std::string& what) {
    if (bad.empty()) bad = what;
  };
  for (const auto& dom : e.universe()) {
    for (std::size_t s = 1; s <= cfg.max_term_size; ++s) {
      e.for_each_from(dom, s, [&](const TypedArrow& x) {
        ++terms;
        if (graphs.size() > 4'000'000) graphs.clear();
        Matrix m = graphs.matrix(x.term);
        if (!(support(m) == graphs.relation(x.term))) fail("support: " + render(x.term));
        distinct[{dom, x.cod}].insert(std::move(m));
      });
    }
  }
  std::map<std::pair<Formula, Formula>, std::vector<Matrix>> values;
  for (auto& [hom, set] : distinct) {
    auto& v = values[hom];
    v.assign(set.begin(), set.end());
    std::sort(v.begin(), v.end(), [](const Matrix& a, const Matrix& b) { return render(a) < render(b); });
    for (const auto& m : v) {
      ++law_checks;
      if (!(resum(single_entry_decomposition(m), m.rows(), m.cols()) == m)) fail("decomposition: " + render(m));
    }
  }
  distinct.clear();
  for (const auto& [hom, ms] : values) {
    Matrix zero(hom.first.occurrences(), hom.second.occurrences());
    std::vector<const Matrix*> v;
    for (const auto& m : ms) v.push_back(&m);
    for (auto* a : v) {
      ++law_checks;
      if (!(*a + zero == *a) || !(zero + *a == *a)) fail("zero unit at " + render(*a));
      for (auto* b : v) {
        ++law_checks;
        if (!(*a + *b == *b + *a)) fail("commutativity");
      }
    }
    // Associativity on a bounded slice of triples.
    for (std::size_t i = 0; i < v.size() && i < 40; ++i) {
      for (std::size_t j = 0; j < v.size() && j < 40; ++j) {
        for (std::size_t k = 0; k < v.size() && k < 40; ++k) {
          ++law_checks;
          if (!((*v[i] + *v[j]) + *v[k] == *v[i] + (*v[j] + *v[k]))) fail("associativity");
        }
      }
    }
  }
  // Bilinearity: h(f+g) = hf + hg and (f+g)k = fk + gk on composable values.
  for (const auto& [hom, fs] : values) {
    std::vector<const Matrix*> v;
    for (const auto& m : fs) v.push_back(&m);
    for (const auto& [hom2, hs] : values) {
      if (!(hom2.first == hom.second)) continue;
      std::size_t hn = 0;
      for (const auto& h : hs) {
        if (++hn > 20) break;
        for (std::size_t i = 0; i < v.size() && i < 20; ++i) {
          for (std::size_t j = 0; j < v.size() && j < 20; ++j) {
            ++law_checks;
            if (!(compose(h, *v[i] + *v[j]) == compose(h, *v[i]) + compose(h, *v[j]))) fail("left bilinearity");
            if (!(compose(*v[i] + *v[j], Matrix::identity(hom.first.occurrences())) == *v[i] + *v[j])) {
              fail("identity");
            }
          }
        }
      }
    }
    for (const auto& [hom0, ks] : values) {
      if (!(hom0.second == hom.first)) continue;
      std::size_t kn = 0;
      for (const auto& k : ks) {
        if (++kn > 20) break;
        for (std::size_t i = 0; i < v.size() && i < 20; ++i) {
          for (std::size_t j = 0; j < v.size() && j < 20; ++j) {
            ++law_checks;
            if (!(compose(*v[i] + *v[j], k) == compose(*v[i], k) + compose(*v[j], k))) fail("right bilinearity");
          }
        }
      }
    }
  }
  std::string d = "terms=" + std::to_string(terms) + " hom-sets=" + std::to_string(values.size()) +
                  " law checks=" + std::to_string(law_checks);
  if (!bad.empty()) d += " first failure: " + bad;
  return {bad.empty() && terms > 0, d};
}

Outcome sum_non_collapse() {
  ArrowTerm sum = parse_arrow("sum(p1[p,p],p2[p,p])");
  bool a = equal_by_generality(sum, parse_arrow("p1[p,p]"));
  bool b = equal_by_generality(sum, parse_arrow("p2[p,p]"));
  return {!a && !b, std::string("sum=p1: ") + (a ? "equal" : "different") + ", sum=p2: " + (b ? "equal" : "different")};
}

std::vector<std::map<std::string, unsigned>> assignments() {
  std::vector<std::map<std::string, unsigned>> out;
  for (unsigned p = 1; p <= 3; ++p) {
    for (unsigned q = 1; q <= 3; ++q) {
      for (unsigned r = 1; r <= 3; ++r) out.push_back({{"p", p}, {"q", q}, {"r", r}});
    }
  }
  return out;
}

bool has_arrow(const Formula& f) {
  if (f.is(Connective::Impl)) return true;
  if (f.is(Connective::Letter) || f.is(Connective::Top) || f.is(Connective::Bot)) return false;
  return has_arrow(f.left()) || has_arrow(f.right());
}

// Scans unordered pairs by increasing size. Pairs whose arithmetic values
// differ cannot be isomorphic, so only iso_check is consulted for them;
// every other pair is settled by the witness search. Stops at the first
// disagreement.
Outcome iso_agreement(Fragment fr, Clock::time_point deadline) {
  const auto start = Clock::now();
  EnumConfig cfg;
  cfg.fragment = fr;
  cfg.letter_pool = {"p", "q", "r"};
  cfg.max_formula_connectives = 3;
  auto universe = formula_universe(cfg);
  const auto assign = assignments();
  std::vector<std::vector<std::string>> values;
  values.reserve(universe.size());
  for (const auto& f : universe) {
    std::vector<std::string> v;
    for (const auto& a : assign) {
      auto x = arithmetic_value(f, a);
      v.push_back(x ? x->str() : "big");
    }
    values.push_back(std::move(v));
  }
  std::uint64_t by_arith = 0;
  std::uint64_t searched = 0;
  auto secs = [&] {
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.0fs", std::chrono::duration<double>(Clock::now() - start).count());
    return std::string(buf);
  };
  for (std::size_t j = 0; j < universe.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      // Arrow-free pairs belong to the cart scan.
      if (fr == Fragment::Ccc && !has_arrow(universe[i]) && !has_arrow(universe[j])) continue;
      bool fast = iso_check(universe[i], universe[j]);
      if (values[i] != values[j]) {
        ++by_arith;
        if (fast) {
          return {false, "iso_check accepts arithmetically distinct " + render(universe[i]) + " vs " +
                             render(universe[j])};
        }
        continue;
      }
      if (Clock::now() > deadline) {
        return {false, "time limit reached after " + std::to_string(searched) + " searches, " +
                           std::to_string(by_arith) + " pairs separated arithmetically, no disagreement so far"};
      }
      ++searched;
      bool slow = find_iso_witness(universe[i], universe[j], 10).has_value();
      if (fast != slow) {
        return {false, "disagreement at " + render(universe[i]) + " vs " + render(universe[j]) +
                           ": iso_check=" + (fast ? "true" : "false") +
                           " witness(10)=" + (slow ? "found" : "absent") + " after " + std::to_string(searched) +
                           " searches, " + std::to_string(by_arith) + " pairs separated arithmetically" + secs()};
      }
    }
  }
  return {true, std::to_string(universe.size()) + " formulas, " + std::to_string(searched) + " searches, " +
                    std::to_string(by_arith) + " pairs separated arithmetically"};
}

Outcome iso_criterion() {
  const auto start = Clock::now();
  Outcome out{true, ""};
  auto verdict = [&](const char* a, const char* b, std::optional<bool> expected) {
    Formula fa = parse_formula(a);
    Formula fb = parse_formula(b);
    bool fast = iso_check(fa, fb);
    bool slow = find_iso_witness(fa, fb, 10).has_value();
    out.pass = out.pass && fast == slow && (!expected || fast == *expected);
    out.detail += std::string(a) + " ~ " + b + ": " + (fast ? "iso" : "not iso") + "/" + (slow ? "witness" : "none") + "; ";
  };
  verdict("p & q", "q & p", true);
  verdict("p & p", "p", false);
  // Currying needs witnesses of 13 and 14 constructors.
  verdict("(p & q) -> r", "p -> q -> r", std::nullopt);
  Outcome cart = iso_agreement(Fragment::Cart, start + std::chrono::seconds(420));
  out.pass = out.pass && cart.pass;
  out.detail += "cart: " + cart.detail + "; ";
  Outcome ccc = iso_agreement(Fragment::Ccc, start + std::chrono::seconds(840));
  out.pass = out.pass && ccc.pass;
  out.detail += "ccc: " + ccc.detail;
  return out;
}

Outcome health() {
  HealthReport r = normalizer_health(20'240'101, 10'000);
  std::string d = "terms=" + std::to_string(r.terms) + " with redexes=" + std::to_string(r.redexes_seen) +
                  " failures=" + std::to_string(r.subject_reduction_failures + r.idempotence_failures +
                                                r.strategy_failures);
  if (!r.healthy()) d += " first: " + r.first_failure;
  return {r.healthy() && r.terms >= 10'000, d};
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  criterion(1, "cartesian coherence", 300, [] { return coherence(Fragment::Cart); });
  criterion(2, "conj-disj agreement", 600, [] { return coherence(Fragment::ConjDisj); });
  criterion(3, "projection separation", 1, [] {
    Report r = run_demo("projections");
    return Outcome{r.holds(), note(r, "graph p1[p,p]") + " / " + note(r, "graph p2[p,p]")};
  });
  criterion(4, "ccc divergence", 1, [] {
    Report r = demo_ccc_divergence();
    bool ok = r.holds() && note(r, "norm") == "equal" && note(r, "types") == "differ";
    return Outcome{ok, "norm=" + note(r, "norm") + " types: " + note(r, "principal type t1") + " vs " +
                           note(r, "principal type t2")};
  });
  criterion(5, "injection generalization", 1, [] {
    ArrowTerm lhs = parse_arrow("comp(case(comp(i1[q,p&p],id[q]),comp(i2[q,p&p],pair(id[p],id[p]))),i1[q,p])");
    ArrowTerm rhs = parse_arrow("i1[q,p&p]");
    Relation a = interp_relation(lhs);
    Relation b = interp_relation(rhs);
    return Outcome{a == b, render(a) + (a == b ? " = " : " != ") + render(b)};
  });
  criterion(6, "maximality probes", 180, probes);
  criterion(7, "matrix semantics", 300, matrix_laws);
  criterion(8, "sum non-collapse", 1, sum_non_collapse);
  criterion(9, "isomorphism oracle agreement", 900, iso_criterion);
  criterion(10, "normalizer health", 300, health);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
