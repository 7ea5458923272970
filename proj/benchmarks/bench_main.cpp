#include <benchmark/benchmark.h>

#include <random>

#include "proofid/enumerate.hpp"
#include "proofid/generality.hpp"
#include "proofid/health.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/parse.hpp"

using namespace proofid;

namespace {

void BM_NormalizeRandom(benchmark::State& state) {
  std::mt19937_64 rng(7);
  RandomTermOptions opts;
  opts.max_term_depth = static_cast<int>(state.range(0));
  std::vector<LambdaTerm> terms;
  for (int i = 0; i < 256; ++i) terms.push_back(random_lambda(rng, random_type(rng, opts), opts));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(terms[i++ % terms.size()]));
}
BENCHMARK(BM_NormalizeRandom)->Arg(4)->Arg(6)->Arg(8);

void BM_NormalizationKeyCurrying(benchmark::State& state) {
  ArrowTerm t = parse_arrow(
      "curry(curry(comp(eval[p & q,r],pair(comp(p1[(p & q) -> r,p],p1[((p & q) -> r) & p,q]),"
      "pair(comp(p2[(p & q) -> r,p],p1[((p & q) -> r) & p,q]),p2[((p & q) -> r) & p,q])))))");
  for (auto _ : state) benchmark::DoNotOptimize(normalization_key(t));
}
BENCHMARK(BM_NormalizationKeyCurrying);

void BM_EnumerateCart(benchmark::State& state) {
  EnumConfig cfg;
  cfg.fragment = Fragment::Cart;
  cfg.max_term_size = static_cast<std::size_t>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    Enumerator e(cfg);
    n = 0;
    for (const auto& dom : e.universe()) {
      for (std::size_t s = 1; s <= cfg.max_term_size; ++s) n += e.from(dom, s).size();
    }
  }
  state.counters["terms"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateCart)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_InterpretMatrix(benchmark::State& state) {
  EnumConfig cfg;
  cfg.fragment = Fragment::Matrix;
  cfg.letter_pool = {"p"};
  cfg.max_formula_connectives = 2;
  cfg.max_term_size = 5;
  Enumerator e(cfg);
  std::vector<ArrowTerm> terms;
  for (const auto& dom : e.universe()) {
    for (const auto& x : e.from(dom, 5)) terms.push_back(x.term);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(interp_matrix(terms[i++ % terms.size()]));
}
BENCHMARK(BM_InterpretMatrix);

void BM_InterpretFunction(benchmark::State& state) {
  EnumConfig cfg;
  cfg.fragment = Fragment::Cart;
  cfg.max_term_size = 5;
  Enumerator e(cfg);
  std::vector<ArrowTerm> terms;
  for (const auto& dom : e.universe()) {
    for (const auto& x : e.from(dom, 5)) terms.push_back(x.term);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(interp_function(terms[i++ % terms.size()]));
}
BENCHMARK(BM_InterpretFunction);

}  // namespace
BENCHMARK_MAIN();
