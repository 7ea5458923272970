#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

struct RandomTermOptions {
  std::vector<std::string> letters{"p", "q"};
  int max_type_depth = 2;
  int max_term_depth = 6;
};

// Random well-typed term of the given type, rich in beta redexes. Missing
// inhabitants of letter types are supplied as free variables z0, z1, ...
LambdaTerm random_lambda(std::mt19937_64& rng, const Formula& type, const RandomTermOptions& options = {});
Formula random_type(std::mt19937_64& rng, const RandomTermOptions& options = {});

struct HealthReport {
  std::uint64_t terms = 0;
  std::uint64_t subject_reduction_failures = 0;
  std::uint64_t idempotence_failures = 0;
  std::uint64_t strategy_failures = 0;
  std::uint64_t redexes_seen = 0;  // terms that were not already beta-normal
  std::string first_failure;

  bool healthy() const {
    return subject_reduction_failures == 0 && idempotence_failures == 0 && strategy_failures == 0;
  }
};

// Normalizes `count` random terms and checks that normal forms keep the
// type, are fixpoints of normalization, and agree (up to renaming of bound
// variables) across the three beta strategies.
HealthReport normalizer_health(std::uint64_t seed, std::uint64_t count, const RandomTermOptions& options = {});

std::string render(const HealthReport& r);

}  // namespace proofid
