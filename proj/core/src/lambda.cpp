#include "proofid/lambda.hpp"

#include <vector>

#include "proofid/error.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

LambdaTerm LambdaTerm::make(LambdaKind k, std::string name, const Formula* type,
                            const LambdaTerm* first, const LambdaTerm* second) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  std::size_t h = mix(static_cast<std::size_t>(k) + 307, std::hash<std::string>{}(name));
  if (type) {
    h = mix(h, type->hash());
    n->type = std::make_unique<Formula>(*type);
  }
  if (first) {
    h = mix(h, first->hash());
    n->size += first->size();
    n->first = std::make_unique<LambdaTerm>(*first);
  }
  if (second) {
    h = mix(h, second->hash());
    n->size += second->size();
    n->second = std::make_unique<LambdaTerm>(*second);
  }
  n->name = std::move(name);
  n->hash = h;
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::var(std::string name, Formula type) {
  return make(LambdaKind::Var, std::move(name), &type, nullptr, nullptr);
}
LambdaTerm LambdaTerm::abs(std::string bound, Formula bound_type, LambdaTerm body) {
  return make(LambdaKind::Abs, std::move(bound), &bound_type, &body, nullptr);
}
LambdaTerm LambdaTerm::app(LambdaTerm fun, LambdaTerm arg) {
  return make(LambdaKind::App, {}, nullptr, &fun, &arg);
}
LambdaTerm LambdaTerm::mk_pair(LambdaTerm first, LambdaTerm second) {
  return make(LambdaKind::MkPair, {}, nullptr, &first, &second);
}
LambdaTerm LambdaTerm::fst(LambdaTerm t) { return make(LambdaKind::Fst, {}, nullptr, &t, nullptr); }
LambdaTerm LambdaTerm::snd(LambdaTerm t) { return make(LambdaKind::Snd, {}, nullptr, &t, nullptr); }
LambdaTerm LambdaTerm::unit() {
  static const LambdaTerm instance = make(LambdaKind::Unit, {}, nullptr, nullptr, nullptr);
  return instance;
}

bool operator==(const LambdaTerm& x, const LambdaTerm& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.kind() != y.kind() || x.size() != y.size()) return false;
  switch (x.kind()) {
    case LambdaKind::Var:
      return x.name() == y.name() && x.type_annotation() == y.type_annotation();
    case LambdaKind::Abs:
      return x.name() == y.name() && x.type_annotation() == y.type_annotation() &&
             x.body() == y.body();
    case LambdaKind::App:
    case LambdaKind::MkPair:
      return x.first() == y.first() && x.second() == y.second();
    case LambdaKind::Fst:
    case LambdaKind::Snd:
      return x.first() == y.first();
    case LambdaKind::Unit:
      return true;
  }
  return false;
}

namespace {

using Scope = std::vector<std::pair<std::string, Formula>>;

const Formula* lookup(const Scope& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

Formula type_in(const LambdaTerm& t, Scope& scope) {
  switch (t.kind()) {
    case LambdaKind::Var: {
      if (const Formula* bound = lookup(scope, t.name())) {
        if (!(*bound == t.type_annotation())) {
          throw TypeError("variable '" + t.name() + "' annotated " +
                              render(t.type_annotation()) + " but bound at " + render(*bound),
                          render(t));
        }
      }
      return t.type_annotation();
    }
    case LambdaKind::Abs: {
      scope.emplace_back(t.name(), t.type_annotation());
      Formula body = type_in(t.body(), scope);
      scope.pop_back();
      return Formula::impl(t.type_annotation(), body);
    }
    case LambdaKind::App: {
      Formula f = type_in(t.fun(), scope);
      Formula a = type_in(t.arg(), scope);
      if (!f.is(Connective::Impl)) {
        throw TypeError("applying a term of non-function type " + render(f), render(t));
      }
      if (!(f.left() == a)) {
        throw TypeError("argument of type " + render(a) + " where " + render(f.left()) +
                            " expected", render(t));
      }
      return f.right();
    }
    case LambdaKind::MkPair:
      return Formula::conj(type_in(t.first(), scope), type_in(t.second(), scope));
    case LambdaKind::Fst:
    case LambdaKind::Snd: {
      Formula p = type_in(t.first(), scope);
      if (!p.is(Connective::Conj)) {
        throw TypeError("projection from non-product type " + render(p), render(t));
      }
      return t.is(LambdaKind::Fst) ? p.left() : p.right();
    }
    case LambdaKind::Unit:
      return Formula::top();
  }
  throw TypeError("unknown lambda constructor", "?");
}

void collect_free(const LambdaTerm& t, std::vector<std::string>& bound,
                  std::map<std::string, Formula>& out) {
  switch (t.kind()) {
    case LambdaKind::Var:
      for (const auto& b : bound) {
        if (b == t.name()) return;
      }
      if (auto [it, fresh] = out.emplace(t.name(), t.type_annotation());
          !fresh && !(it->second == t.type_annotation())) {
        throw TypeError("free variable '" + t.name() + "' used at types " +
                            render(it->second) + " and " + render(t.type_annotation()),
                        t.name());
      }
      return;
    case LambdaKind::Abs:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case LambdaKind::App:
    case LambdaKind::MkPair:
      collect_free(t.first(), bound, out);
      collect_free(t.second(), bound, out);
      return;
    case LambdaKind::Fst:
    case LambdaKind::Snd:
      collect_free(t.first(), bound, out);
      return;
    case LambdaKind::Unit:
      return;
  }
}

}  // namespace

Formula type_of(const LambdaTerm& t) {
  free_variables(t);
  Scope scope;
  return type_in(t, scope);
}

std::map<std::string, Formula> free_variables(const LambdaTerm& t) {
  std::vector<std::string> bound;
  std::map<std::string, Formula> out;
  collect_free(t, bound, out);
  return out;
}

bool is_closed(const LambdaTerm& t) { return free_variables(t).empty(); }

}  // namespace proofid
