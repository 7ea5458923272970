#include <gtest/gtest.h>

#include <map>

#include "proofid/enumerate.hpp"
#include "proofid/error.hpp"
#include "proofid/generality.hpp"
#include "proofid/harness.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/parse.hpp"
#include "proofid/render.hpp"

using namespace proofid;

namespace {

EnumConfig small(Fragment fr) {
  EnumConfig cfg;
  cfg.fragment = fr;
  cfg.letter_pool = {"p", "q"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 5;
  return cfg;
}

std::string note(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.notes) {
    if (k == key) return v;
  }
  return "<missing>";
}

EnumConfig probe_cfg() {
  EnumConfig cfg;
  cfg.fragment = Fragment::Cart;
  cfg.letter_pool = {"p"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 5;
  return cfg;
}

bool has_projection_witness(const Report& r, std::size_t max_depth) {
  for (const auto& w : r.witnesses) {
    bool pp = (w.lhs == "p1[p,p]" && w.rhs == "p2[p,p]") || (w.lhs == "p2[p,p]" && w.rhs == "p1[p,p]");
    if (pp && w.depth <= max_depth) return true;
  }
  return false;
}

}  // namespace

// Pairwise oracle: every same-type pair judged by both criteria directly.
TEST(CheckStar, CartMatchesPairwiseOracle) {
  EnumConfig cfg = small(Fragment::Cart);
  cfg.max_term_size = 4;
  Report r = check_star(cfg);
  EXPECT_TRUE(r.holds());
  std::uint64_t pairs = 0;
  std::uint64_t disagreements = 0;
  auto universe = formula_universe(cfg);
  for (const auto& dom : universe) {
    for (const auto& cod : universe) {
      auto hom = enumerate_arrows(cfg, dom, cod);
      for (std::size_t i = 0; i < hom.size(); ++i) {
        for (std::size_t j = i + 1; j < hom.size(); ++j) {
          ++pairs;
          if (equal_by_normalization(hom[i], hom[j]) != equal_by_generality(hom[i], hom[j])) ++disagreements;
        }
      }
    }
  }
  EXPECT_EQ(disagreements, 0u);
  EXPECT_EQ(r.checked_pairs, pairs);
}

TEST(CheckStar, ConjDisjSmall) {
  Report r = check_star(small(Fragment::ConjDisj));
  EXPECT_TRUE(r.holds()) << render_text(r);
  EXPECT_GT(r.checked_pairs, 0u);
}

TEST(CheckStar, RejectsOtherFragments) {
  EXPECT_THROW(check_star(small(Fragment::Ccc)), Error);
  EXPECT_THROW(check_star(small(Fragment::Matrix)), Error);
}

TEST(CheckStar, Deterministic) {
  EnumConfig cfg = small(Fragment::Cart);
  cfg.max_term_size = 4;
  EXPECT_TRUE(check_star(cfg).same_content(check_star(cfg)));
}

TEST(Demos, ProjectionsDiffer) {
  Report r = run_demo("projections");
  EXPECT_TRUE(r.holds()) << render_text(r);
  EXPECT_EQ(note(r, "graph p1[p,p]"), "function source=1 target=2 map=[0]");
  EXPECT_EQ(note(r, "graph p2[p,p]"), "function source=1 target=2 map=[1]");
}

TEST(Demos, CccDivergence) {
  Report r = demo_ccc_divergence();
  EXPECT_TRUE(r.holds()) << render_text(r);
  EXPECT_EQ(note(r, "norm"), "equal");
  EXPECT_EQ(note(r, "types"), "differ");
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.same_content(demo_ccc_divergence()));
}

TEST(Demos, AllRunDeterministically) {
  for (const auto& name : demo_names()) {
    Report a = run_demo(name);
    EXPECT_TRUE(a.holds()) << name << "\n" << render_text(a);
    EXPECT_TRUE(a.same_content(run_demo(name))) << name;
    EXPECT_EQ(render_text(a), render_text(run_demo(name))) << name;
  }
  EXPECT_THROW(run_demo("nope"), PreconditionError);
}

TEST(Demos, InjectionGeneralization) {
  Report r = run_demo("injection-generalization");
  EXPECT_EQ(note(r, "relation lhs"), note(r, "relation rhs"));
}

TEST(Probe, SwapSeedCollapses) {
  Report r = probe_maximality(parse_arrow("pair(p2[p,p],p1[p,p])"), parse_arrow("id[p & p]"), probe_cfg(), 3);
  EXPECT_TRUE(has_projection_witness(r, 2)) << render_text(r);
}

TEST(Probe, DiagonalSeedCollapses) {
  Report r = probe_maximality(parse_arrow("pair(p1[p,p],p1[p,p])"), parse_arrow("id[p & p]"), probe_cfg(), 3);
  EXPECT_TRUE(has_projection_witness(r, 2)) << render_text(r);
}

TEST(Probe, ProjectionSeedCollapsesHomSet) {
  Report r = probe_maximality(parse_arrow("p1[p,p]"), parse_arrow("p2[p,p]"), probe_cfg(), 3);
  bool found = false;
  for (const auto& w : r.witnesses) {
    if (w.note.find("hom-set collapse at " + render(parse_formula("p & p")) + " => p") == 0) found = true;
  }
  EXPECT_TRUE(found) << render_text(r);
  EXPECT_NE(note(r, "collapsed hom-sets"), "0");
}

TEST(Probe, Rejections) {
  EXPECT_THROW(probe_maximality(parse_arrow("comp(p1[p,p],pair(id[p],id[p]))"), parse_arrow("id[p]"), probe_cfg(), 3),
               PreconditionError);
  EXPECT_THROW(probe_maximality(parse_arrow("p1[p,p]"), parse_arrow("id[p]"), probe_cfg(), 3), Error);
  EXPECT_THROW(probe_maximality(parse_arrow("i1[p,p]"), parse_arrow("i2[p,p]"), probe_cfg(), 3), Error);
  EnumConfig tight = probe_cfg();
  tight.max_pair_checks = 5;
  EXPECT_THROW(probe_maximality(parse_arrow("p1[p,p]"), parse_arrow("p2[p,p]"), tight, 3), BoundError);
}

TEST(ReportRendering, TextAndStructured) {
  Report r;
  r.title = "t";
  r.checked_pairs = 3;
  r.violations.push_back({"a", "b", true, false});
  r.witnesses.push_back({"x", "y", "n", 1});
  r.notes.emplace_back("k", "v");
  std::string s = render_structured(r);
  EXPECT_EQ(s.find("elapsedMs"), std::string::npos);
  EXPECT_NE(s.find("\"checkedPairs\": 3"), std::string::npos) << s;
  EXPECT_NE(render_structured(r, true).find("elapsedMs"), std::string::npos);
  EXPECT_FALSE(r.holds());
  std::string text = render_text(r);
  EXPECT_NE(text.find("t"), std::string::npos);
  EXPECT_NE(text.find("a"), std::string::npos);
}
