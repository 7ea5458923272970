#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "proofid/formula.hpp"

namespace proofid {

// Fragments and the constructors / connectives each admits.
//
//   constructor        CART  CONJDISJ  CCC  MATRIX
//   id, comp            x       x       x     x
//   p1, p2, pair        x       x       x     x
//   bang                x               x
//   i1, i2, case                x             x
//   curry, eval                         x
//   sum, zero                                 x
//
//   connectives: CART {&, T}; CONJDISJ {&, |}; CCC {&, ->, T};
//   MATRIX {&, |}. F is never admitted in an arrow term.
enum class Fragment { Cart, ConjDisj, Ccc, Matrix };

std::string_view to_string(Fragment f);
std::optional<Fragment> fragment_from_string(std::string_view s);

enum class ArrowKind {
  Id, Comp, Bang, Proj1, Proj2, Pair, Inj1, Inj2, Copair, Curry, Eval, Sum, Zero
};

std::string_view to_string(ArrowKind k);

// Immutable categorical proof term. Construction does not check typing;
// use infer_type() to validate.
//
// Child order follows the textual syntax: comp(g, f) stores g as first()
// and f as second(), meaning g after f.
class ArrowTerm {
 public:
  static ArrowTerm id(Formula a);
  static ArrowTerm comp(ArrowTerm g, ArrowTerm f);
  static ArrowTerm bang(Formula a);
  static ArrowTerm proj1(Formula a, Formula b);
  static ArrowTerm proj2(Formula a, Formula b);
  static ArrowTerm pair(ArrowTerm f, ArrowTerm g);
  static ArrowTerm inj1(Formula a, Formula b);
  static ArrowTerm inj2(Formula a, Formula b);
  static ArrowTerm copair(ArrowTerm f, ArrowTerm g);
  static ArrowTerm curry(ArrowTerm f);
  static ArrowTerm eval(Formula b, Formula c);
  static ArrowTerm sum(ArrowTerm f, ArrowTerm g);
  static ArrowTerm zero(Formula a, Formula b);

  ArrowKind kind() const { return node_->kind; }
  bool is_primitive() const { return node_->arity == 0; }
  int arity() const { return node_->arity; }

  // Formula parameters of primitives (a only for id/bang).
  const Formula& a() const { return *node_->a; }
  const Formula& b() const { return *node_->b; }
  const ArrowTerm& first() const { return *node_->first; }
  const ArrowTerm& second() const { return *node_->second; }

  // Constructor count.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  // Stable address of the shared node; equal identities imply equal terms.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const ArrowTerm& x, const ArrowTerm& y);

 private:
  struct Node {
    ArrowKind kind;
    int arity = 0;
    std::optional<Formula> a;
    std::optional<Formula> b;
    std::unique_ptr<ArrowTerm> first;
    std::unique_ptr<ArrowTerm> second;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit ArrowTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static ArrowTerm primitive(ArrowKind k, Formula a, std::optional<Formula> b);
  static ArrowTerm compound(ArrowKind k, ArrowTerm x, std::optional<ArrowTerm> y);

  std::shared_ptr<const Node> node_;
};

struct ArrowHash {
  std::size_t operator()(const ArrowTerm& t) const { return t.hash(); }
};

struct ArrowType {
  Formula dom;
  Formula cod;
  friend bool operator==(const ArrowType&, const ArrowType&) = default;
};

// Domain and codomain of a well-typed term; throws TypeError naming the
// path of the first offending subterm.
ArrowType infer_type(const ArrowTerm& t);

bool is_legal(ArrowKind k, Fragment f);
bool is_legal(const Formula& a, Fragment f);

// Throws FragmentError if any constructor or formula falls outside `f`.
void check_fragment(const ArrowTerm& t, Fragment f);

// Smallest fragment admitting `t`, trying CART, CONJDISJ, CCC, MATRIX in
// that order. Throws FragmentError if none admits it.
Fragment smallest_fragment(const ArrowTerm& t);

}  // namespace proofid
