#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "proofid/formula.hpp"

namespace proofid {

enum class LambdaKind { Var, Abs, App, MkPair, Fst, Snd, Unit };

// Immutable simply typed lambda term over product (&), function (->) and
// unit (T) types. Variables carry their type; for bound variables it must
// match the binder annotation.
class LambdaTerm {
 public:
  static LambdaTerm var(std::string name, Formula type);
  static LambdaTerm abs(std::string bound, Formula bound_type, LambdaTerm body);
  static LambdaTerm app(LambdaTerm fun, LambdaTerm arg);
  static LambdaTerm mk_pair(LambdaTerm first, LambdaTerm second);
  static LambdaTerm fst(LambdaTerm t);
  static LambdaTerm snd(LambdaTerm t);
  static LambdaTerm unit();

  LambdaKind kind() const { return node_->kind; }
  bool is(LambdaKind k) const { return node_->kind == k; }

  // Var: variable name. Abs: bound name.
  const std::string& name() const { return node_->name; }
  // Var: its type. Abs: binder type.
  const Formula& type_annotation() const { return *node_->type; }

  // Abs: body. App: function. MkPair: first. Fst/Snd: operand.
  const LambdaTerm& first() const { return *node_->first; }
  // App: argument. MkPair: second.
  const LambdaTerm& second() const { return *node_->second; }

  const LambdaTerm& body() const { return first(); }
  const LambdaTerm& fun() const { return first(); }
  const LambdaTerm& arg() const { return second(); }

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const LambdaTerm& x, const LambdaTerm& y);

 private:
  struct Node {
    LambdaKind kind;
    std::string name;
    std::unique_ptr<Formula> type;
    std::unique_ptr<LambdaTerm> first;
    std::unique_ptr<LambdaTerm> second;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit LambdaTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static LambdaTerm make(LambdaKind k, std::string name, const Formula* type,
                         const LambdaTerm* first, const LambdaTerm* second);

  std::shared_ptr<const Node> node_;
};

// Type of a term; throws TypeError on ill-typed input, including bound
// variables whose annotation disagrees with their binder.
Formula type_of(const LambdaTerm& t);

// Free variables with their annotated types.
std::map<std::string, Formula> free_variables(const LambdaTerm& t);

bool is_closed(const LambdaTerm& t);

}  // namespace proofid
