#include "proofid/error.hpp"
#include "proofid/lambda_engine.hpp"

namespace proofid {

namespace {

class Translator {
 public:
  LambdaTerm operator()(const ArrowTerm& t) {
    using L = LambdaTerm;
    const ArrowType type = infer_type(t);
    switch (t.kind()) {
      case ArrowKind::Id: {
        auto x = fresh();
        return L::abs(x, type.dom, L::var(x, type.dom));
      }
      case ArrowKind::Bang: {
        auto x = fresh();
        return L::abs(x, type.dom, L::unit());
      }
      case ArrowKind::Proj1:
      case ArrowKind::Proj2: {
        auto x = fresh();
        L v = L::var(x, type.dom);
        return L::abs(x, type.dom, t.kind() == ArrowKind::Proj1 ? L::fst(v) : L::snd(v));
      }
      case ArrowKind::Comp: {
        L g = (*this)(t.first());
        L f = (*this)(t.second());
        auto x = fresh();
        return L::abs(x, type.dom, L::app(g, L::app(f, L::var(x, type.dom))));
      }
      case ArrowKind::Pair: {
        L f = (*this)(t.first());
        L g = (*this)(t.second());
        auto x = fresh();
        L v = L::var(x, type.dom);
        return L::abs(x, type.dom, L::mk_pair(L::app(f, v), L::app(g, v)));
      }
      case ArrowKind::Curry: {
        L f = (*this)(t.first());
        const Formula& b = type.cod.left();
        auto x = fresh();
        auto y = fresh();
        return L::abs(x, type.dom,
                      L::abs(y, b, L::app(f, L::mk_pair(L::var(x, type.dom), L::var(y, b)))));
      }
      case ArrowKind::Eval: {
        auto z = fresh();
        L v = L::var(z, type.dom);
        return L::abs(z, type.dom, L::app(L::fst(v), L::snd(v)));
      }
      default:
        throw FragmentError("constructor '" + std::string(to_string(t.kind())) +
                            "' has no lambda translation (CART/CCC only)");
    }
  }

 private:
  std::string fresh() { return "x" + std::to_string(counter_++); }
  int counter_ = 0;
};

}  // namespace

LambdaTerm to_lambda(const ArrowTerm& t) {
  check_fragment(t, Fragment::Ccc);
  return Translator{}(t);
}

}  // namespace proofid
