#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

// ---- Curry-Howard translation ---------------------------------------------

// Closed lambda term of type dom(t) -> cod(t). Accepts CART and CCC terms;
// throws FragmentError otherwise.
LambdaTerm to_lambda(const ArrowTerm& t);

// ---- normalization --------------------------------------------------------

// Redex selection for the beta phase. All strategies reach the same beta
// normal form; Eager is a big-step evaluator, the other two are small-step.
enum class Strategy { Eager, NormalOrder, Applicative };

// Beta normal form (function, first/second-of-pair redexes).
LambdaTerm beta_normalize(const LambdaTerm& t, Strategy strategy = Strategy::Eager);

// Eta-long expansion of a beta-normal term: every subterm of function type
// is an abstraction, of product type a pair, of type T the unit.
LambdaTerm eta_expand(const LambdaTerm& beta_normal);

// Long beta-eta normal form, unique up to renaming of bound variables.
// Throws TypeError on ill-typed input.
LambdaTerm normalize(const LambdaTerm& t, Strategy strategy = Strategy::Eager);

// Renames binders to v0, v1, ... in order of occurrence (skipping names
// free in the term). Alpha-equivalent inputs give structurally equal outputs.
LambdaTerm alpha_canonical(const LambdaTerm& t);

// alpha_canonical(normalize(to_lambda(t))).
LambdaTerm normalization_key(const ArrowTerm& t);

// Same proof under beta-eta equality. Requires equal types and CART/CCC.
bool equal_by_normalization(const ArrowTerm& f, const ArrowTerm& g);

// ---- unification and principal types --------------------------------------

// Finite map from letters (acting as type variables) to formulas, kept
// idempotent: no bound letter occurs in any right-hand side.
class Substitution {
 public:
  Formula apply(const Formula& f) const;
  // Adds var := f (after applying the current map to f) and rewrites the
  // existing right-hand sides. Throws UnificationError on occurs-check.
  void bind(const std::string& var, const Formula& f);
  bool binds(const std::string& var) const { return map_.count(var) != 0; }
  const std::map<std::string, Formula>& bindings() const { return map_; }
  bool empty() const { return map_.empty(); }

 private:
  std::map<std::string, Formula> map_;
};

using ConstraintTrace = std::vector<std::pair<Formula, Formula>>;

// Most general unifier. Letters in `rigid` act as constants; all other
// letters are variables. Throws UnificationError on clash or occurs-check.
Substitution unify(const Formula& a, const Formula& b, const std::set<std::string>& rigid = {},
                   ConstraintTrace* trace = nullptr);

struct TypingReport {
  Formula principal_type;
  ConstraintTrace constraint_trace;
};

// Most general type of a closed term skeleton. Every letter occurrence in a
// binder annotation is replaced by a fresh variable; the structure of the
// annotation is kept. Variables in the result are renamed a, b, c, ... in
// order of first occurrence. Throws UnificationError when untypable.
TypingReport principal_type(const LambdaTerm& skeleton);

// Letters renamed a, b, c, ... (then a1, b1, ...) by first occurrence.
Formula rename_canonically(const Formula& f);

// Equal up to a bijective renaming of letters.
bool renaming_equivalent(const Formula& a, const Formula& b);

// True iff some substitution of letters of `general` yields `specific`.
bool is_instance(const Formula& general, const Formula& specific);

}  // namespace proofid
