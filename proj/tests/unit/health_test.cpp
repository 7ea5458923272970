#include <gtest/gtest.h>

#include "proofid/health.hpp"
#include "proofid/lambda.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/render.hpp"

using namespace proofid;

TEST(RandomLambda, HasRequestedType) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2'000; ++i) {
    Formula ty = random_type(rng);
    LambdaTerm t = random_lambda(rng, ty);
    ASSERT_EQ(type_of(t), ty) << render(t);
  }
}

TEST(RandomLambda, Deterministic) {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int i = 0; i < 100; ++i) {
    Formula ta = random_type(a);
    ASSERT_EQ(ta, random_type(b));
    ASSERT_EQ(render(random_lambda(a, ta)), render(random_lambda(b, ta)));
  }
}

TEST(NormalizerHealth, SmallRunIsHealthy) {
  HealthReport r = normalizer_health(1, 2'000);
  EXPECT_TRUE(r.healthy()) << render(r);
  EXPECT_EQ(r.terms, 2'000u);
  EXPECT_GT(r.redexes_seen, 1'000u);
  EXPECT_EQ(render(r), render(normalizer_health(1, 2'000)));
}

TEST(NormalizerHealth, WiderTypes) {
  RandomTermOptions o;
  o.letters = {"p", "q", "r"};
  o.max_type_depth = 3;
  o.max_term_depth = 7;
  HealthReport r = normalizer_health(99, 1'000, o);
  EXPECT_TRUE(r.healthy()) << render(r);
}
