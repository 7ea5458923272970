#include <set>
#include <vector>

#include "proofid/error.hpp"
#include "proofid/lambda_engine.hpp"

namespace proofid {

namespace {

using L = LambdaTerm;
using Names = std::set<std::string>;

void free_names(const L& t, std::vector<std::string>& bound, Names& out) {
  switch (t.kind()) {
    case LambdaKind::Var:
      for (const auto& b : bound) {
        if (b == t.name()) return;
      }
      out.insert(t.name());
      return;
    case LambdaKind::Abs:
      bound.push_back(t.name());
      free_names(t.body(), bound, out);
      bound.pop_back();
      return;
    case LambdaKind::App:
    case LambdaKind::MkPair:
      free_names(t.first(), bound, out);
      free_names(t.second(), bound, out);
      return;
    case LambdaKind::Fst:
    case LambdaKind::Snd:
      free_names(t.first(), bound, out);
      return;
    case LambdaKind::Unit:
      return;
  }
}

Names free_names(const L& t) {
  std::vector<std::string> bound;
  Names out;
  free_names(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const Names& avoid) {
  for (int k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

// Capture-avoiding t[x := s]; `s_free` are the free names of s.
L substitute(const L& t, const std::string& x, const L& s, const Names& s_free) {
  switch (t.kind()) {
    case LambdaKind::Var:
      return t.name() == x ? s : t;
    case LambdaKind::Unit:
      return t;
    case LambdaKind::Abs: {
      if (t.name() == x) return t;
      if (s_free.count(t.name())) {
        Names avoid = s_free;
        Names body_free = free_names(t.body());
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(x);
        std::string y = fresh_name(t.name(), avoid);
        L renamed = substitute(t.body(), t.name(), L::var(y, t.type_annotation()),
                               Names{y});
        return L::abs(y, t.type_annotation(), substitute(renamed, x, s, s_free));
      }
      return L::abs(t.name(), t.type_annotation(), substitute(t.body(), x, s, s_free));
    }
    case LambdaKind::App:
      return L::app(substitute(t.fun(), x, s, s_free), substitute(t.arg(), x, s, s_free));
    case LambdaKind::MkPair:
      return L::mk_pair(substitute(t.first(), x, s, s_free), substitute(t.second(), x, s, s_free));
    case LambdaKind::Fst:
      return L::fst(substitute(t.first(), x, s, s_free));
    case LambdaKind::Snd:
      return L::snd(substitute(t.first(), x, s, s_free));
  }
  return t;
}

L substitute(const L& t, const std::string& x, const L& s) {
  return substitute(t, x, s, free_names(s));
}

// ---- beta ------------------------------------------------------------------

std::optional<L> contract_root(const L& t) {
  if (t.is(LambdaKind::App) && t.fun().is(LambdaKind::Abs)) {
    return substitute(t.fun().body(), t.fun().name(), t.arg());
  }
  if ((t.is(LambdaKind::Fst) || t.is(LambdaKind::Snd)) && t.first().is(LambdaKind::MkPair)) {
    return t.is(LambdaKind::Fst) ? t.first().first() : t.first().second();
  }
  return std::nullopt;
}

std::optional<L> step(const L& t, Strategy strategy);

std::optional<L> step_children(const L& t, Strategy strategy) {
  switch (t.kind()) {
    case LambdaKind::Abs:
      if (auto b = step(t.body(), strategy)) return L::abs(t.name(), t.type_annotation(), *b);
      return std::nullopt;
    case LambdaKind::App:
      if (auto f = step(t.fun(), strategy)) return L::app(*f, t.arg());
      if (auto a = step(t.arg(), strategy)) return L::app(t.fun(), *a);
      return std::nullopt;
    case LambdaKind::MkPair:
      if (auto a = step(t.first(), strategy)) return L::mk_pair(*a, t.second());
      if (auto b = step(t.second(), strategy)) return L::mk_pair(t.first(), *b);
      return std::nullopt;
    case LambdaKind::Fst:
      if (auto a = step(t.first(), strategy)) return L::fst(*a);
      return std::nullopt;
    case LambdaKind::Snd:
      if (auto a = step(t.first(), strategy)) return L::snd(*a);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<L> step(const L& t, Strategy strategy) {
  if (strategy == Strategy::NormalOrder) {
    if (auto r = contract_root(t)) return r;
    return step_children(t, strategy);
  }
  if (auto r = step_children(t, strategy)) return r;
  return contract_root(t);
}

L eager(const L& t) {
  switch (t.kind()) {
    case LambdaKind::Var:
    case LambdaKind::Unit:
      return t;
    case LambdaKind::Abs:
      return L::abs(t.name(), t.type_annotation(), eager(t.body()));
    case LambdaKind::MkPair:
      return L::mk_pair(eager(t.first()), eager(t.second()));
    case LambdaKind::App: {
      L f = eager(t.fun());
      L a = eager(t.arg());
      if (f.is(LambdaKind::Abs)) return eager(substitute(f.body(), f.name(), a));
      return L::app(f, a);
    }
    case LambdaKind::Fst:
    case LambdaKind::Snd: {
      L p = eager(t.first());
      if (p.is(LambdaKind::MkPair)) return t.is(LambdaKind::Fst) ? p.first() : p.second();
      return t.is(LambdaKind::Fst) ? L::fst(p) : L::snd(p);
    }
  }
  return t;
}

// ---- eta -------------------------------------------------------------------

// Type synthesis on terms whose variables carry their types.
Formula synth(const L& t) {
  switch (t.kind()) {
    case LambdaKind::Var: return t.type_annotation();
    case LambdaKind::Abs: return Formula::impl(t.type_annotation(), synth(t.body()));
    case LambdaKind::App: return synth(t.fun()).right();
    case LambdaKind::MkPair: return Formula::conj(synth(t.first()), synth(t.second()));
    case LambdaKind::Fst: return synth(t.first()).left();
    case LambdaKind::Snd: return synth(t.first()).right();
    case LambdaKind::Unit: return Formula::top();
  }
  return Formula::top();
}

L eta_at(const L& t, const Formula& type);

// Expands a neutral term (variable head, eliminations only) by its type.
L expand_neutral_by_type(const L& n, const Formula& type) {
  switch (type.kind()) {
    case Connective::Top:
      return L::unit();
    case Connective::Impl: {
      std::string x = fresh_name("e", free_names(n));
      L v = eta_at(L::var(x, type.left()), type.left());
      return L::abs(x, type.left(), expand_neutral_by_type(L::app(n, v), type.right()));
    }
    case Connective::Conj:
      return L::mk_pair(expand_neutral_by_type(L::fst(n), type.left()),
                        expand_neutral_by_type(L::snd(n), type.right()));
    default:
      return n;
  }
}

// Eta-expands the arguments inside a neutral spine.
L expand_spine(const L& n) {
  switch (n.kind()) {
    case LambdaKind::App:
      return L::app(expand_spine(n.fun()), eta_at(n.arg(), synth(n.arg())));
    case LambdaKind::Fst:
      return L::fst(expand_spine(n.first()));
    case LambdaKind::Snd:
      return L::snd(expand_spine(n.first()));
    default:
      return n;
  }
}

L eta_at(const L& t, const Formula& type) {
  if (type.is(Connective::Top)) return L::unit();
  switch (t.kind()) {
    case LambdaKind::Abs:
      return L::abs(t.name(), t.type_annotation(), eta_at(t.body(), type.right()));
    case LambdaKind::MkPair:
      return L::mk_pair(eta_at(t.first(), type.left()), eta_at(t.second(), type.right()));
    case LambdaKind::Unit:
      return t;
    default:
      return expand_neutral_by_type(expand_spine(t), type);
  }
}

// ---- alpha -----------------------------------------------------------------

class Canonicalizer {
 public:
  explicit Canonicalizer(Names free) : free_(std::move(free)) {}

  L operator()(const L& t) {
    switch (t.kind()) {
      case LambdaKind::Var:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == t.name()) return L::var(it->second, t.type_annotation());
        }
        return t;
      case LambdaKind::Unit:
        return t;
      case LambdaKind::Abs: {
        std::string name = next();
        scope_.emplace_back(t.name(), name);
        L body = (*this)(t.body());
        scope_.pop_back();
        return L::abs(name, t.type_annotation(), body);
      }
      case LambdaKind::App:
        return L::app((*this)(t.fun()), (*this)(t.arg()));
      case LambdaKind::MkPair: {
        L a = (*this)(t.first());
        return L::mk_pair(a, (*this)(t.second()));
      }
      case LambdaKind::Fst:
        return L::fst((*this)(t.first()));
      case LambdaKind::Snd:
        return L::snd((*this)(t.first()));
    }
    return t;
  }

 private:
  std::string next() {
    while (true) {
      std::string candidate = "v" + std::to_string(counter_++);
      if (!free_.count(candidate)) return candidate;
    }
  }

  Names free_;
  std::vector<std::pair<std::string, std::string>> scope_;
  int counter_ = 0;
};

}  // namespace

LambdaTerm beta_normalize(const LambdaTerm& t, Strategy strategy) {
  if (strategy == Strategy::Eager) return eager(t);
  L current = t;
  while (auto next = step(current, strategy)) current = *next;
  return current;
}

LambdaTerm eta_expand(const LambdaTerm& beta_normal) {
  return eta_at(beta_normal, synth(beta_normal));
}

LambdaTerm normalize(const LambdaTerm& t, Strategy strategy) {
  Formula type = type_of(t);
  return eta_at(beta_normalize(t, strategy), type);
}

LambdaTerm alpha_canonical(const LambdaTerm& t) { return Canonicalizer(free_names(t))(t); }

LambdaTerm normalization_key(const ArrowTerm& t) { return alpha_canonical(normalize(to_lambda(t))); }

bool equal_by_normalization(const ArrowTerm& f, const ArrowTerm& g) {
  ArrowType tf = infer_type(f);
  ArrowType tg = infer_type(g);
  if (!(tf == tg)) {
    throw TypeError("terms have different types: " + std::string("dom/cod mismatch"), "root");
  }
  check_fragment(f, Fragment::Ccc);
  check_fragment(g, Fragment::Ccc);
  return normalization_key(f) == normalization_key(g);
}

}  // namespace proofid
