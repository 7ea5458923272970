#include "proofid/render.hpp"

#include <vector>

namespace proofid {

namespace {

// Precedence levels: 1 implication, 2 disjunction, 3 conjunction, 4 atom.
std::string formula_at(const Formula& f, int context) {
  auto wrap = [&](int level, std::string s) {
    return level < context ? "(" + s + ")" : s;
  };
  switch (f.kind()) {
    case Connective::Letter: return f.name();
    case Connective::Top: return "T";
    case Connective::Bot: return "F";
    case Connective::Impl:
      return wrap(1, formula_at(f.left(), 2) + " -> " + formula_at(f.right(), 1));
    case Connective::Disj:
      return wrap(2, formula_at(f.left(), 2) + " | " + formula_at(f.right(), 3));
    case Connective::Conj:
      return wrap(3, formula_at(f.left(), 3) + " & " + formula_at(f.right(), 4));
  }
  return "?";
}

enum class Slot { Top, Head, Arg };

std::string lambda_at(const LambdaTerm& t, Slot slot, std::vector<std::string>& bound) {
  switch (t.kind()) {
    case LambdaKind::Var: {
      for (const auto& b : bound) {
        if (b == t.name()) return t.name();
      }
      return "(" + t.name() + ":" + render(t.type_annotation()) + ")";
    }
    case LambdaKind::Unit:
      return "unit";
    case LambdaKind::MkPair:
      return "(" + lambda_at(t.first(), Slot::Top, bound) + ", " +
             lambda_at(t.second(), Slot::Top, bound) + ")";
    case LambdaKind::Abs: {
      const Formula& ty = t.type_annotation();
      std::string ann = ty.is(Connective::Letter) || ty.is(Connective::Top) || ty.is(Connective::Bot)
                            ? render(ty)
                            : "(" + render(ty) + ")";
      bound.push_back(t.name());
      std::string s = "\\" + t.name() + ":" + ann + ". " + lambda_at(t.body(), Slot::Top, bound);
      bound.pop_back();
      return slot == Slot::Top ? s : "(" + s + ")";
    }
    case LambdaKind::App: {
      std::string s = lambda_at(t.fun(), Slot::Head, bound) + " " +
                      lambda_at(t.arg(), Slot::Arg, bound);
      return slot == Slot::Arg ? "(" + s + ")" : s;
    }
    case LambdaKind::Fst:
    case LambdaKind::Snd: {
      std::string s = std::string(t.is(LambdaKind::Fst) ? "fst " : "snd ") +
                      lambda_at(t.first(), Slot::Arg, bound);
      return slot == Slot::Arg ? "(" + s + ")" : s;
    }
  }
  return "?";
}

}  // namespace

std::string render(const Formula& f) { return formula_at(f, 0); }

std::string render(const ArrowTerm& t) {
  std::string head(to_string(t.kind()));
  switch (t.kind()) {
    case ArrowKind::Id:
    case ArrowKind::Bang:
      return head + "[" + render(t.a()) + "]";
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
    case ArrowKind::Eval:
    case ArrowKind::Zero:
      return head + "[" + render(t.a()) + "," + render(t.b()) + "]";
    case ArrowKind::Curry:
      return head + "(" + render(t.first()) + ")";
    default:
      return head + "(" + render(t.first()) + "," + render(t.second()) + ")";
  }
}

std::string render(const LambdaTerm& t) {
  std::vector<std::string> bound;
  return lambda_at(t, Slot::Top, bound);
}

std::string render(const ArrowType& t) { return render(t.dom) + " => " + render(t.cod); }

}  // namespace proofid
