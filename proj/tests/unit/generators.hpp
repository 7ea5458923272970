#pragma once

// Hand-rolled random generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"

namespace proofid::gen {

inline int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

// Formula over the given connectives (Conj, Disj, Impl) plus letters and,
// when allowed, T and F.
inline Formula random_formula(std::mt19937_64& rng, int depth, const std::vector<Connective>& ops,
                              bool top = true, bool bot = false,
                              const std::vector<std::string>& letters = {"p", "q", "r"}) {
  if (depth <= 0 || ops.empty() || pick(rng, 3) == 0) {
    int r = pick(rng, 6);
    if (top && r == 0) return Formula::top();
    if (bot && r == 1) return Formula::bot();
    return Formula::letter(letters[pick(rng, static_cast<int>(letters.size()))]);
  }
  Connective c = ops[pick(rng, static_cast<int>(ops.size()))];
  Formula l = random_formula(rng, depth - 1, ops, top, bot, letters);
  Formula r = random_formula(rng, depth - 1, ops, top, bot, letters);
  if (c == Connective::Conj) return Formula::conj(l, r);
  if (c == Connective::Disj) return Formula::disj(l, r);
  return Formula::impl(l, r);
}

struct Typed {
  ArrowTerm term;
  Formula cod;
};

// Well-typed term out of `dom` in the fragment, of constructor depth about
// `depth`. Objects stay small because codomains come from the term itself.
inline Typed random_arrow(std::mt19937_64& rng, Fragment fr, const Formula& dom, int depth) {
  auto leaf = [&]() -> Typed {
    std::vector<Typed> options{{ArrowTerm::id(dom), dom}};
    if (is_legal(ArrowKind::Bang, fr)) options.push_back({ArrowTerm::bang(dom), Formula::top()});
    if (dom.is(Connective::Conj)) {
      options.push_back({ArrowTerm::proj1(dom.left(), dom.right()), dom.left()});
      options.push_back({ArrowTerm::proj2(dom.left(), dom.right()), dom.right()});
    }
    if (is_legal(ArrowKind::Inj1, fr)) {
      Formula other = Formula::letter(pick(rng, 2) ? "p" : "q");
      options.push_back({ArrowTerm::inj1(dom, other), Formula::disj(dom, other)});
      options.push_back({ArrowTerm::inj2(other, dom), Formula::disj(other, dom)});
    }
    if (is_legal(ArrowKind::Eval, fr) && dom.is(Connective::Conj) && dom.left().is(Connective::Impl) &&
        dom.left().left() == dom.right()) {
      options.push_back({ArrowTerm::eval(dom.right(), dom.left().right()), dom.left().right()});
    }
    if (is_legal(ArrowKind::Zero, fr)) {
      Formula cod = Formula::letter(pick(rng, 2) ? "p" : "q");
      options.push_back({ArrowTerm::zero(dom, cod), cod});
    }
    return options[pick(rng, static_cast<int>(options.size()))];
  };
  if (depth <= 0 || pick(rng, 4) == 0) return leaf();
  switch (pick(rng, 6)) {
    case 0: {
      Typed f = random_arrow(rng, fr, dom, depth - 1);
      Typed g = random_arrow(rng, fr, f.cod, depth - 1);
      return {ArrowTerm::comp(g.term, f.term), g.cod};
    }
    case 1: {
      Typed f = random_arrow(rng, fr, dom, depth - 1);
      Typed g = random_arrow(rng, fr, dom, depth - 1);
      return {ArrowTerm::pair(f.term, g.term), Formula::conj(f.cod, g.cod)};
    }
    case 2:
      if (is_legal(ArrowKind::Copair, fr) && dom.is(Connective::Disj)) {
        Typed f = random_arrow(rng, fr, dom.left(), depth - 1);
        // The right branch maps into the same codomain through an injection
        // or a projection path when possible.
        for (int attempt = 0; attempt < 8; ++attempt) {
          Typed g = random_arrow(rng, fr, dom.right(), depth - 1);
          if (g.cod == f.cod) return {ArrowTerm::copair(f.term, g.term), f.cod};
        }
        if (dom.left() == dom.right()) return {ArrowTerm::copair(f.term, f.term), f.cod};
      }
      break;
    case 3:
      if (is_legal(ArrowKind::Curry, fr)) {
        Formula x = Formula::letter(pick(rng, 2) ? "p" : "q");
        Typed f = random_arrow(rng, fr, Formula::conj(dom, x), depth - 1);
        return {ArrowTerm::curry(f.term), Formula::impl(x, f.cod)};
      }
      break;
    case 4:
      if (is_legal(ArrowKind::Sum, fr)) {
        Typed f = random_arrow(rng, fr, dom, depth - 1);
        for (int attempt = 0; attempt < 8; ++attempt) {
          Typed g = random_arrow(rng, fr, dom, depth - 1);
          if (g.cod == f.cod) return {ArrowTerm::sum(f.term, g.term), f.cod};
        }
        return {ArrowTerm::sum(f.term, f.term), f.cod};
      }
      break;
    default:
      break;
  }
  Typed f = random_arrow(rng, fr, dom, depth - 1);
  Typed g = random_arrow(rng, fr, f.cod, depth - 1);
  return {ArrowTerm::comp(g.term, f.term), g.cod};
}

inline std::vector<Connective> connectives_of(Fragment fr) {
  switch (fr) {
    case Fragment::Cart: return {Connective::Conj};
    case Fragment::Ccc: return {Connective::Conj, Connective::Impl};
    default: return {Connective::Conj, Connective::Disj};
  }
}

inline Formula random_object(std::mt19937_64& rng, Fragment fr, int depth) {
  bool top = fr == Fragment::Cart || fr == Fragment::Ccc;
  return random_formula(rng, depth, connectives_of(fr), top, false, {"p", "q"});
}

}  // namespace proofid::gen
