#include "proofid/arrow.hpp"

#include <array>
#include <functional>

#include "proofid/error.hpp"

namespace proofid {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string show(const Formula& f);

std::string show(const Formula& f) {
  switch (f.kind()) {
    case Connective::Letter: return f.name();
    case Connective::Top: return "T";
    case Connective::Bot: return "F";
    case Connective::Conj: return "(" + show(f.left()) + " & " + show(f.right()) + ")";
    case Connective::Disj: return "(" + show(f.left()) + " | " + show(f.right()) + ")";
    case Connective::Impl: return "(" + show(f.left()) + " -> " + show(f.right()) + ")";
  }
  return "?";
}

}  // namespace

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::Cart: return "cart";
    case Fragment::ConjDisj: return "conjdisj";
    case Fragment::Ccc: return "ccc";
    case Fragment::Matrix: return "matrix";
  }
  return "?";
}

std::optional<Fragment> fragment_from_string(std::string_view s) {
  if (s == "cart") return Fragment::Cart;
  if (s == "conjdisj") return Fragment::ConjDisj;
  if (s == "ccc") return Fragment::Ccc;
  if (s == "matrix") return Fragment::Matrix;
  return std::nullopt;
}

std::string_view to_string(ArrowKind k) {
  switch (k) {
    case ArrowKind::Id: return "id";
    case ArrowKind::Comp: return "comp";
    case ArrowKind::Bang: return "bang";
    case ArrowKind::Proj1: return "p1";
    case ArrowKind::Proj2: return "p2";
    case ArrowKind::Pair: return "pair";
    case ArrowKind::Inj1: return "i1";
    case ArrowKind::Inj2: return "i2";
    case ArrowKind::Copair: return "case";
    case ArrowKind::Curry: return "curry";
    case ArrowKind::Eval: return "eval";
    case ArrowKind::Sum: return "sum";
    case ArrowKind::Zero: return "zero";
  }
  return "?";
}

ArrowTerm ArrowTerm::primitive(ArrowKind k, Formula a, std::optional<Formula> b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->hash = mix(mix(static_cast<std::size_t>(k) + 101, a.hash()), b ? b->hash() : 0);
  n->a = std::move(a);
  n->b = std::move(b);
  return ArrowTerm(std::move(n));
}

ArrowTerm ArrowTerm::compound(ArrowKind k, ArrowTerm x, std::optional<ArrowTerm> y) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->arity = y ? 2 : 1;
  n->size = 1 + x.size() + (y ? y->size() : 0);
  n->hash = mix(mix(static_cast<std::size_t>(k) + 211, x.hash()), y ? y->hash() : 0);
  n->first = std::make_unique<ArrowTerm>(std::move(x));
  if (y) n->second = std::make_unique<ArrowTerm>(std::move(*y));
  return ArrowTerm(std::move(n));
}

ArrowTerm ArrowTerm::id(Formula a) { return primitive(ArrowKind::Id, std::move(a), std::nullopt); }
ArrowTerm ArrowTerm::bang(Formula a) { return primitive(ArrowKind::Bang, std::move(a), std::nullopt); }
ArrowTerm ArrowTerm::proj1(Formula a, Formula b) { return primitive(ArrowKind::Proj1, std::move(a), std::move(b)); }
ArrowTerm ArrowTerm::proj2(Formula a, Formula b) { return primitive(ArrowKind::Proj2, std::move(a), std::move(b)); }
ArrowTerm ArrowTerm::inj1(Formula a, Formula b) { return primitive(ArrowKind::Inj1, std::move(a), std::move(b)); }
ArrowTerm ArrowTerm::inj2(Formula a, Formula b) { return primitive(ArrowKind::Inj2, std::move(a), std::move(b)); }
ArrowTerm ArrowTerm::eval(Formula b, Formula c) { return primitive(ArrowKind::Eval, std::move(b), std::move(c)); }
ArrowTerm ArrowTerm::zero(Formula a, Formula b) { return primitive(ArrowKind::Zero, std::move(a), std::move(b)); }

ArrowTerm ArrowTerm::comp(ArrowTerm g, ArrowTerm f) { return compound(ArrowKind::Comp, std::move(g), std::move(f)); }
ArrowTerm ArrowTerm::pair(ArrowTerm f, ArrowTerm g) { return compound(ArrowKind::Pair, std::move(f), std::move(g)); }
ArrowTerm ArrowTerm::copair(ArrowTerm f, ArrowTerm g) { return compound(ArrowKind::Copair, std::move(f), std::move(g)); }
ArrowTerm ArrowTerm::sum(ArrowTerm f, ArrowTerm g) { return compound(ArrowKind::Sum, std::move(f), std::move(g)); }
ArrowTerm ArrowTerm::curry(ArrowTerm f) { return compound(ArrowKind::Curry, std::move(f), std::nullopt); }

bool operator==(const ArrowTerm& x, const ArrowTerm& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.kind() != y.kind() || x.size() != y.size()) return false;
  if (x.is_primitive()) {
    if (!(x.a() == y.a())) return false;
    if (x.node_->b.has_value() != y.node_->b.has_value()) return false;
    return !x.node_->b || x.b() == y.b();
  }
  if (!(x.first() == y.first())) return false;
  return x.arity() == 1 || x.second() == y.second();
}

namespace {

ArrowType infer_at(const ArrowTerm& t, const std::string& path) {
  using F = Formula;
  switch (t.kind()) {
    case ArrowKind::Id: return {t.a(), t.a()};
    case ArrowKind::Bang: return {t.a(), F::top()};
    case ArrowKind::Proj1: return {F::conj(t.a(), t.b()), t.a()};
    case ArrowKind::Proj2: return {F::conj(t.a(), t.b()), t.b()};
    case ArrowKind::Inj1: return {t.a(), F::disj(t.a(), t.b())};
    case ArrowKind::Inj2: return {t.b(), F::disj(t.a(), t.b())};
    case ArrowKind::Eval: return {F::conj(F::impl(t.a(), t.b()), t.a()), t.b()};
    case ArrowKind::Zero: return {t.a(), t.b()};
    case ArrowKind::Comp: {
      auto g = infer_at(t.first(), path + ".comp.g");
      auto f = infer_at(t.second(), path + ".comp.f");
      if (!(f.cod == g.dom)) {
        throw TypeError("composition mismatch: cod(f) = " + show(f.cod) +
                            " but dom(g) = " + show(g.dom), path);
      }
      return {f.dom, g.cod};
    }
    case ArrowKind::Pair: {
      auto f = infer_at(t.first(), path + ".pair.f");
      auto g = infer_at(t.second(), path + ".pair.g");
      if (!(f.dom == g.dom)) {
        throw TypeError("pairing mismatch: dom(f) = " + show(f.dom) +
                            " but dom(g) = " + show(g.dom), path);
      }
      return {f.dom, F::conj(f.cod, g.cod)};
    }
    case ArrowKind::Copair: {
      auto f = infer_at(t.first(), path + ".case.f");
      auto g = infer_at(t.second(), path + ".case.g");
      if (!(f.cod == g.cod)) {
        throw TypeError("copairing mismatch: cod(f) = " + show(f.cod) +
                            " but cod(g) = " + show(g.cod), path);
      }
      return {F::disj(f.dom, g.dom), f.cod};
    }
    case ArrowKind::Sum: {
      auto f = infer_at(t.first(), path + ".sum.f");
      auto g = infer_at(t.second(), path + ".sum.g");
      if (!(f == g)) {
        throw TypeError("sum mismatch: " + show(f.dom) + " -> " + show(f.cod) +
                            " vs " + show(g.dom) + " -> " + show(g.cod), path);
      }
      return f;
    }
    case ArrowKind::Curry: {
      auto f = infer_at(t.first(), path + ".curry.f");
      if (!f.dom.is(Connective::Conj)) {
        throw TypeError("curry expects a conjunctive domain, got " + show(f.dom), path);
      }
      return {f.dom.left(), F::impl(f.dom.right(), f.cod)};
    }
  }
  throw TypeError("unknown constructor", path);
}

}  // namespace

ArrowType infer_type(const ArrowTerm& t) { return infer_at(t, "root"); }

bool is_legal(ArrowKind k, Fragment f) {
  switch (k) {
    case ArrowKind::Id:
    case ArrowKind::Comp:
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
    case ArrowKind::Pair:
      return true;
    case ArrowKind::Bang:
      return f == Fragment::Cart || f == Fragment::Ccc;
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
    case ArrowKind::Copair:
      return f == Fragment::ConjDisj || f == Fragment::Matrix;
    case ArrowKind::Curry:
    case ArrowKind::Eval:
      return f == Fragment::Ccc;
    case ArrowKind::Sum:
    case ArrowKind::Zero:
      return f == Fragment::Matrix;
  }
  return false;
}

bool is_legal(const Formula& a, Fragment f) {
  switch (a.kind()) {
    case Connective::Letter:
    case Connective::Conj:
      break;
    case Connective::Bot:
      return false;
    case Connective::Top:
      return f == Fragment::Cart || f == Fragment::Ccc;
    case Connective::Disj:
      if (f != Fragment::ConjDisj && f != Fragment::Matrix) return false;
      break;
    case Connective::Impl:
      if (f != Fragment::Ccc) return false;
      break;
  }
  if (a.is(Connective::Letter)) return true;
  return is_legal(a.left(), f) && is_legal(a.right(), f);
}

namespace {

void check_at(const ArrowTerm& t, Fragment f) {
  if (!is_legal(t.kind(), f)) {
    throw FragmentError("constructor '" + std::string(to_string(t.kind())) +
                        "' is not legal in fragment " + std::string(to_string(f)));
  }
  if (t.is_primitive()) {
    auto check_formula = [&](const Formula& a) {
      if (!is_legal(a, f)) {
        throw FragmentError("formula " + show(a) + " is not legal in fragment " +
                            std::string(to_string(f)));
      }
    };
    check_formula(t.a());
    if (t.kind() != ArrowKind::Id && t.kind() != ArrowKind::Bang) check_formula(t.b());
    return;
  }
  check_at(t.first(), f);
  if (t.arity() == 2) check_at(t.second(), f);
}

}  // namespace

void check_fragment(const ArrowTerm& t, Fragment f) { check_at(t, f); }

Fragment smallest_fragment(const ArrowTerm& t) {
  for (Fragment f : {Fragment::Cart, Fragment::ConjDisj, Fragment::Ccc, Fragment::Matrix}) {
    try {
      check_at(t, f);
      return f;
    } catch (const FragmentError&) {
    }
  }
  throw FragmentError("term fits no fragment");
}

}  // namespace proofid
