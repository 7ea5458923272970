#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

struct EnumConfig {
  Fragment fragment = Fragment::Cart;
  std::vector<std::string> letter_pool{"p", "q"};
  std::size_t max_formula_connectives = 3;
  // Term size is the constructor count.
  std::size_t max_term_size = 7;
  // Keep one representative per normalization class (CART/CCC only).
  bool dedup_by_normal_form = false;
  // When nonempty, objects are instead the conjunctions of at most
  // max_factors members of this basis; letter pool and connective bound
  // are then ignored. Used for subformula-bounded searches.
  std::vector<Formula> factor_basis;
  std::size_t max_factors = 3;
  std::size_t max_terms_per_hom_set = 20'000;
  std::size_t max_pair_checks = 10'000'000;

  // Throws PreconditionError on bounds < 1, empty or invalid letter pool,
  // or dedup requested outside CART/CCC.
  void validate() const;
  // Formula legal in the fragment and within the object bounds.
  bool admits(const Formula& f) const;
};

// All admitted formulas, ordered by connective count, then generation order.
std::vector<Formula> formula_universe(const EnumConfig& cfg);

// Incremental long-normal-form keys: the key of a compound term is computed
// from the cached normal forms of its immediate subterms. Agrees with
// normalization_key() (checked by tests).
class NormalizationCache {
 public:
  // Alpha-canonical long normal form rendered as text.
  const std::string& key(const ArrowTerm& t);
  // As key(), caching only the subterms of `t`.
  std::string transient_key(const ArrowTerm& t);
  // Closed long normal form (not alpha-canonicalized).
  const LambdaTerm& normal(const ArrowTerm& t);
  std::size_t size() const { return cache_.size(); }
  void clear() { cache_.clear(); }

 private:
  struct Entry {
    ArrowTerm term;
    LambdaTerm normal;
    std::string key;
  };
  const Entry& entry(const ArrowTerm& t);
  LambdaTerm compute(const ArrowTerm& t);
  std::unordered_map<const void*, Entry> cache_;
};

struct TypedArrow {
  ArrowTerm term;
  Formula cod;
};

// Bottom-up exhaustive generator of well-typed terms. Every dom/cod of
// every subterm is admitted by the configuration; results are deterministic.
class Enumerator {
 public:
  explicit Enumerator(EnumConfig cfg);

  const EnumConfig& config() const { return cfg_; }

  // Terms with domain `dom` and exactly `size` constructors (memoized).
  const std::vector<TypedArrow>& from(const Formula& dom, std::size_t size);

  // Same terms, streamed without memoizing this size level.
  void for_each_from(const Formula& dom, std::size_t size,
                     const std::function<void(const TypedArrow&)>& visit);

  // All terms dom -> cod with size <= max_term_size, by increasing size.
  std::vector<ArrowTerm> hom_set(const Formula& dom, const Formula& cod);

  const std::vector<Formula>& universe() const { return universe_; }
  NormalizationCache& normalization() { return norm_; }

 private:
  void generate(const Formula& dom, std::size_t size,
                const std::function<void(TypedArrow)>& emit);
  bool accept_representative(const Formula& dom, const ArrowTerm& t);

  EnumConfig cfg_;
  std::vector<Formula> universe_;
  std::unordered_map<Formula, std::map<std::size_t, std::vector<TypedArrow>>, FormulaHash> memo_;
  std::unordered_map<Formula, std::unordered_set<std::string>, FormulaHash> seen_keys_;
  NormalizationCache norm_;
};

// All well-typed terms dom -> cod of the configured fragment with at most
// max_term_size constructors. Throws PreconditionError if dom or cod are
// outside the bounds, BoundError if the hom-set exceeds its cap.
std::vector<ArrowTerm> enumerate_arrows(const EnumConfig& cfg, const Formula& dom, const Formula& cod);

}  // namespace proofid
