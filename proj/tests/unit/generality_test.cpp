#include <gtest/gtest.h>

#include "generators.hpp"
#include "proofid/enumerate.hpp"
#include "proofid/error.hpp"
#include "proofid/generality.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/parse.hpp"
#include "proofid/render.hpp"

using namespace proofid;

namespace {

ArrowTerm t(const char* s) { return parse_arrow(s); }

// Reads the function graph of a CART term off its long normal form: each
// letter leaf is a projection path into the bound variable.
void read_leaves(const LambdaTerm& m, const Formula& dom, std::vector<std::size_t>& out) {
  switch (m.kind()) {
    case LambdaKind::MkPair:
      read_leaves(m.first(), dom, out);
      read_leaves(m.second(), dom, out);
      return;
    case LambdaKind::Unit:
      return;
    default: {
      std::vector<int> path;
      const LambdaTerm* cur = &m;
      while (cur->is(LambdaKind::Fst) || cur->is(LambdaKind::Snd)) {
        path.push_back(cur->is(LambdaKind::Fst) ? 1 : 2);
        cur = &cur->first();
      }
      std::size_t offset = 0;
      Formula at = dom;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (*it == 2) offset += at.left().occurrences();
        at = *it == 1 ? at.left() : at.right();
      }
      out.push_back(offset);
    }
  }
}

OrdinalFunction function_oracle(const ArrowTerm& a) {
  LambdaTerm n = normalize(to_lambda(a));
  ArrowType ty = infer_type(a);
  OrdinalFunction out;
  out.source_size = ty.cod.occurrences();
  out.target_size = ty.dom.occurrences();
  read_leaves(n.body(), ty.dom, out.map);
  return out;
}

bool difunctional_oracle(const Relation& r) {
  for (auto [a, b] : r.pairs) {
    for (auto [c, d] : r.pairs) {
      for (auto [e, g] : r.pairs) {
        // a R b, c R b, c R d  =>  a R d ; here with b shared and c shared.
        if (b == d && c == e && !r.contains(a, g)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(FunctionGraph, Projections) {
  EXPECT_EQ(interp_function(t("p1[p,p]")).map, std::vector<std::size_t>{0});
  EXPECT_EQ(interp_function(t("p2[p,p]")).map, std::vector<std::size_t>{1});
  EXPECT_EQ(interp_function(t("id[p & q]")), OrdinalFunction::identity(2));
  EXPECT_EQ(interp_function(t("comp(p1[p,p],pair(id[p],id[p]))")), OrdinalFunction::identity(1));
  EXPECT_EQ(interp_function(t("bang[p & q]")).map, std::vector<std::size_t>{});
  EXPECT_EQ(render(interp_function(t("p1[p,q & p]"))), "function source=1 target=3 map=[0]");
}

TEST(FunctionGraph, AgreesWithNormalFormOracle) {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 10'000; ++i) {
    Formula dom = gen::random_object(rng, Fragment::Cart, 2);
    ArrowTerm a = gen::random_arrow(rng, Fragment::Cart, dom, 5).term;
    ASSERT_EQ(interp_function(a), function_oracle(a)) << render(a);
  }
}

TEST(RelationGraph, Examples) {
  EXPECT_EQ(interp_relation(t("pair(id[p],id[p])")).pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}}));
  EXPECT_EQ(interp_relation(t("id[p | q]")), Relation::identity(2));
  ArrowTerm lhs = parse_arrow("comp(case(comp(i1[q,p&p],id[q]),comp(i2[q,p&p],pair(id[p],id[p]))),i1[q,p])");
  EXPECT_EQ(interp_relation(lhs).pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}));
  EXPECT_EQ(interp_relation(lhs), interp_relation(t("i1[q,p & p]")));
  EXPECT_EQ(render(interp_relation(t("case(id[p],id[p])"))), "relation dom=2 cod=1 pairs=[(0,0),(1,0)]");
  EXPECT_THROW(interp_relation(t("bang[p]")), FragmentError);
}

TEST(MatrixGraph, Examples) {
  EXPECT_EQ(interp_matrix(t("sum(p1[p,p],p2[p,p])")), Matrix::from_rows({{1}, {1}}, 1));
  Matrix z = interp_matrix(t("zero[p,q]"));
  EXPECT_EQ(z.rows(), 1u);
  EXPECT_EQ(z.cols(), 1u);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(interp_matrix(t("sum(p1[p,q],zero[p&q,p])")), interp_matrix(t("p1[p,q]")));
  EXPECT_EQ(interp_matrix(t("sum(comp(pair(id[p],id[p]),p1[p,p]),pair(p1[p,p],p1[p,p]))")),
            Matrix::from_rows({{2, 2}, {0, 0}}, 2));
  EXPECT_EQ(render(interp_matrix(t("sum(p1[p,p],p2[p,p])"))), "matrix rows=2 cols=1 [[1],[1]]");
}

TEST(Support, Examples) {
  EXPECT_EQ(support(Matrix::from_rows({{2, 0}, {0, 1}}, 2)), Relation::identity(2));
  EXPECT_TRUE(support(Matrix(2, 3)).pairs.empty());
  ArrowTerm a = t("comp(p1[p,p],pair(id[p],id[p]))");
  EXPECT_EQ(support(interp_matrix(a)), interp_relation(a));
}

TEST(Difunctional, Examples) {
  EXPECT_TRUE(is_difunctional(Relation::identity(2)));
  Relation r = Relation::from_pairs(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_FALSE(difunctional_oracle(r));
  EXPECT_FALSE(is_difunctional(r));
  EXPECT_TRUE(is_difunctional(Relation::from_pairs(3, 3, {})));
}

TEST(Difunctional, AgreesWithOracleOnAllSmallRelations) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (unsigned bits = 0; bits < (1u << (n * m)); ++bits) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n * m; ++i) {
          if (bits & (1u << i)) pairs.emplace_back(i / m, i % m);
        }
        Relation r = Relation::from_pairs(n, m, pairs);
        ASSERT_EQ(is_difunctional(r), difunctional_oracle(r)) << render(r);
      }
    }
  }
}

TEST(Difunctional, NotClosedUnderComposition) {
  auto w = find_difunctional_noncomposition_witness(3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(difunctional_oracle(w->first));
  EXPECT_TRUE(difunctional_oracle(w->second));
  EXPECT_EQ(compose(w->second, w->first), w->composite);
  EXPECT_FALSE(difunctional_oracle(w->composite));
}

TEST(Functoriality, AllInterpretations) {
  std::mt19937_64 rng(707);
  for (int i = 0; i < 10'000; ++i) {
    Fragment fr = i % 2 ? Fragment::Cart : Fragment::Matrix;
    Formula a = gen::random_object(rng, fr, 2);
    auto f = gen::random_arrow(rng, fr, a, 3);
    auto g = gen::random_arrow(rng, fr, f.cod, 3);
    ArrowTerm gf = ArrowTerm::comp(g.term, f.term);
    if (fr == Fragment::Cart) {
      ASSERT_EQ(interp_function(ArrowTerm::id(a)), OrdinalFunction::identity(a.occurrences()));
      ASSERT_EQ(interp_function(gf), compose(interp_function(g.term), interp_function(f.term)));
      ASSERT_EQ(interp_function(gf), function_oracle(gf));
    } else {
      ASSERT_EQ(interp_matrix(ArrowTerm::id(a)), Matrix::identity(a.occurrences()));
      ASSERT_EQ(interp_matrix(gf), compose(interp_matrix(g.term), interp_matrix(f.term)));
      ASSERT_EQ(interp_relation(ArrowTerm::id(a)), Relation::identity(a.occurrences()));
      ASSERT_EQ(interp_relation(gf), compose(interp_relation(g.term), interp_relation(f.term)));
      ASSERT_EQ(support(interp_matrix(gf)), interp_relation(gf)) << render(gf);
    }
  }
}

TEST(MatrixLaws, SumAndComposition) {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 2'000; ++i) {
    Formula a = gen::random_object(rng, Fragment::Matrix, 2);
    auto f = gen::random_arrow(rng, Fragment::Matrix, a, 3);
    auto g = gen::random_arrow(rng, Fragment::Matrix, a, 3);
    if (!(g.cod == f.cod)) g = f;
    auto h = gen::random_arrow(rng, Fragment::Matrix, f.cod, 3);
    auto k = gen::random_arrow(rng, Fragment::Matrix, gen::random_object(rng, Fragment::Matrix, 1), 2);
    ArrowTerm zero = ArrowTerm::zero(a, f.cod);
    auto m = [](const ArrowTerm& x) { return interp_matrix(x); };
    ASSERT_EQ(m(ArrowTerm::sum(f.term, g.term)), m(ArrowTerm::sum(g.term, f.term)));
    ASSERT_EQ(m(ArrowTerm::sum(ArrowTerm::sum(f.term, g.term), f.term)),
              m(ArrowTerm::sum(f.term, ArrowTerm::sum(g.term, f.term))));
    ASSERT_EQ(m(ArrowTerm::sum(f.term, zero)), m(f.term));
    ASSERT_EQ(m(ArrowTerm::comp(h.term, ArrowTerm::sum(f.term, g.term))),
              m(ArrowTerm::sum(ArrowTerm::comp(h.term, f.term), ArrowTerm::comp(h.term, g.term))));
    ASSERT_TRUE(m(ArrowTerm::comp(h.term, zero)).is_zero());
    if (k.cod == a) {
      ASSERT_EQ(m(ArrowTerm::comp(ArrowTerm::sum(f.term, g.term), k.term)),
                m(ArrowTerm::sum(ArrowTerm::comp(f.term, k.term), ArrowTerm::comp(g.term, k.term))));
    }
  }
}

TEST(MatrixNormalForm, DecompositionResums) {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 2'000; ++i) {
    Formula a = gen::random_object(rng, Fragment::Matrix, 2);
    Matrix m = interp_matrix(gen::random_arrow(rng, Fragment::Matrix, a, 4).term);
    auto parts = single_entry_decomposition(m);
    Natural total = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) total += m.at(r, c);
    }
    ASSERT_EQ(Natural(parts.size()), total);
    for (const auto& p : parts) {
      Natural sum = 0;
      for (std::size_t r = 0; r < p.rows(); ++r) {
        for (std::size_t c = 0; c < p.cols(); ++c) sum += p.at(r, c);
      }
      ASSERT_EQ(sum, 1);
    }
    ASSERT_EQ(resum(parts, m.rows(), m.cols()), m);
  }
  EXPECT_THROW(single_entry_decomposition(Matrix::from_rows({{5}}, 1), 4), BoundError);
}

TEST(EqualByGenerality, Examples) {
  EXPECT_FALSE(equal_by_generality(t("p1[p,p]"), t("p2[p,p]")));
  EXPECT_TRUE(equal_by_generality(t("comp(p1[p,p],pair(id[p],id[p]))"), t("id[p]")));
  EXPECT_FALSE(equal_by_generality(t("sum(p1[p,p],p2[p,p])"), t("p1[p,p]")));
  EXPECT_FALSE(equal_by_generality(t("sum(p1[p,p],p2[p,p])"), t("p2[p,p]")));
  EXPECT_THROW(equal_by_generality(t("curry(p1[p,q])"), t("curry(p1[p,q])")), FragmentError);
  EXPECT_THROW(equal_by_generality(t("p1[p,q]"), t("id[p]")), TypeError);
}

TEST(EqualByGenerality, ExhaustiveSemiringHomomorphism) {
  EnumConfig cfg;
  cfg.fragment = Fragment::Matrix;
  cfg.letter_pool = {"p"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 4;
  Enumerator e(cfg);
  std::size_t n = 0;
  for (const auto& dom : e.universe()) {
    for (std::size_t s = 1; s <= cfg.max_term_size; ++s) {
      for (const auto& x : e.from(dom, s)) {
        ASSERT_EQ(support(interp_matrix(x.term)), interp_relation(x.term)) << render(x.term);
        ++n;
      }
    }
  }
  EXPECT_GT(n, 1'000u);
}

TEST(GraphCache, AgreesWithDirectInterpretation) {
  EnumConfig cfg;
  cfg.fragment = Fragment::Matrix;
  cfg.letter_pool = {"p"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 4;
  Enumerator e(cfg);
  GraphCache cache;
  for (const auto& dom : e.universe()) {
    for (std::size_t s = 1; s <= cfg.max_term_size; ++s) {
      for (const auto& x : e.from(dom, s)) {
        ASSERT_EQ(cache.matrix(x.term), interp_matrix(x.term)) << render(x.term);
        ASSERT_EQ(cache.relation(x.term), interp_relation(x.term)) << render(x.term);
      }
    }
  }
  EXPECT_GT(cache.size(), 0u);
}
