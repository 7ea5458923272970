#include "proofid/conjdisj_rewrite.hpp"

#include "proofid/error.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

// Cut-free derivation of dom |- cod.
struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

enum class Rule { Atom, PairR, CaseL, ProjL, InjR };

struct Proof {
  Rule rule;
  int index = 0;  // 1 or 2 for ProjL / InjR
  Formula dom;
  Formula cod;
  ProofPtr a;
  ProofPtr b;
};

ProofPtr atom(const Formula& p) { return std::make_shared<Proof>(Proof{Rule::Atom, 0, p, p, {}, {}}); }

ProofPtr pair_r(ProofPtr a, ProofPtr b) {
  Formula dom = a->dom;
  Formula cod = Formula::conj(a->cod, b->cod);
  return std::make_shared<Proof>(Proof{Rule::PairR, 0, dom, cod, std::move(a), std::move(b)});
}

ProofPtr case_l(ProofPtr a, ProofPtr b) {
  Formula dom = Formula::disj(a->dom, b->dom);
  Formula cod = a->cod;
  return std::make_shared<Proof>(Proof{Rule::CaseL, 0, dom, cod, std::move(a), std::move(b)});
}

// From a: part |- C, derive whole |- C where part is component i of whole.
ProofPtr proj_l(int i, const Formula& whole, ProofPtr a) {
  Formula cod = a->cod;
  return std::make_shared<Proof>(Proof{Rule::ProjL, i, whole, cod, std::move(a), {}});
}

// From a: A |- part, derive A |- whole where part is component j of whole.
ProofPtr inj_r(int j, const Formula& whole, ProofPtr a) {
  Formula dom = a->dom;
  return std::make_shared<Proof>(Proof{Rule::InjR, j, dom, whole, std::move(a), {}});
}

const Formula& component(const Formula& f, int i) { return i == 1 ? f.left() : f.right(); }

ProofPtr identity(const Formula& f) {
  switch (f.kind()) {
    case Connective::Letter:
      return atom(f);
    case Connective::Conj:
      return pair_r(proj_l(1, f, identity(f.left())), proj_l(2, f, identity(f.right())));
    case Connective::Disj:
      return case_l(inj_r(1, f, identity(f.left())), inj_r(2, f, identity(f.right())));
    default:
      throw FragmentError("formula outside {&, |} in conjdisj rewriting");
  }
}

// Cut elimination: f : A |- B and g : B |- C give A |- C.
ProofPtr cut(const ProofPtr& f, const ProofPtr& g) {
  if (g->rule == Rule::PairR) return pair_r(cut(f, g->a), cut(f, g->b));
  if (f->rule == Rule::CaseL) return case_l(cut(f->a, g), cut(f->b, g));
  if (f->rule == Rule::ProjL) return proj_l(f->index, f->dom, cut(f->a, g));
  if (g->rule == Rule::InjR) return inj_r(g->index, g->cod, cut(f, g->a));
  if (f->rule == Rule::PairR && g->rule == Rule::ProjL) {
    return cut(g->index == 1 ? f->a : f->b, g->a);
  }
  if (f->rule == Rule::InjR && g->rule == Rule::CaseL) {
    return cut(f->a, f->index == 1 ? g->a : g->b);
  }
  if (f->rule == Rule::Atom && g->rule == Rule::Atom) return f;
  throw Error("internal: unexpected cut configuration");
}

ProofPtr canon(const ProofPtr& x);

// If x : A1 & A2 |- C factors as y after projection i, returns y.
ProofPtr factor(const ProofPtr& x, int i) {
  switch (x->rule) {
    case Rule::ProjL:
      return x->index == i ? x->a : nullptr;
    case Rule::PairR: {
      ProofPtr a = factor(x->a, i);
      if (!a) return nullptr;
      ProofPtr b = factor(x->b, i);
      if (!b) return nullptr;
      return pair_r(a, b);
    }
    case Rule::InjR: {
      ProofPtr a = factor(x->a, i);
      return a ? inj_r(x->index, x->cod, a) : nullptr;
    }
    default:
      return nullptr;
  }
}

// For canonical x : D1 | D2 |- C, the derivation of D_k |- C obtained by
// precomposing the k-th injection.
ProofPtr restrict(const ProofPtr& x, int k) {
  switch (x->rule) {
    case Rule::CaseL:
      return k == 1 ? x->a : x->b;
    case Rule::PairR:
      return pair_r(restrict(x->a, k), restrict(x->b, k));
    case Rule::InjR:
      return inj_r(x->index, x->cod, restrict(x->a, k));
    default:
      throw Error("internal: restrict on a derivation without a disjunctive domain");
  }
}

ProofPtr canon(const ProofPtr& x) {
  switch (x->rule) {
    case Rule::Atom:
      return x;
    case Rule::PairR:
      return pair_r(canon(x->a), canon(x->b));
    case Rule::CaseL: {
      ProofPtr a = canon(x->a);
      ProofPtr b = canon(x->b);
      if (a->rule == Rule::PairR && b->rule == Rule::PairR) {
        return pair_r(canon(case_l(a->a, b->a)), canon(case_l(a->b, b->b)));
      }
      return case_l(a, b);
    }
    case Rule::ProjL: {
      ProofPtr y = canon(x->a);
      if (y->rule == Rule::PairR) {
        return pair_r(canon(proj_l(x->index, x->dom, y->a)), canon(proj_l(x->index, x->dom, y->b)));
      }
      return proj_l(x->index, x->dom, y);
    }
    case Rule::InjR: {
      ProofPtr y = canon(x->a);
      if (x->dom.is(Connective::Disj)) {
        return case_l(canon(inj_r(x->index, x->cod, restrict(y, 1))),
                      canon(inj_r(x->index, x->cod, restrict(y, 2))));
      }
      if (x->dom.is(Connective::Conj)) {
        for (int i : {1, 2}) {
          if (ProofPtr z = factor(y, i)) {
            return proj_l(i, x->dom, canon(inj_r(x->index, x->cod, z)));
          }
        }
      }
      return inj_r(x->index, x->cod, y);
    }
  }
  return x;
}

ProofPtr translate(const ArrowTerm& t);

ProofPtr translate(const ArrowTerm& t) {
  switch (t.kind()) {
    case ArrowKind::Id:
      return identity(t.a());
    case ArrowKind::Proj1:
    case ArrowKind::Proj2: {
      Formula whole = Formula::conj(t.a(), t.b());
      int i = t.kind() == ArrowKind::Proj1 ? 1 : 2;
      return proj_l(i, whole, identity(component(whole, i)));
    }
    case ArrowKind::Inj1:
    case ArrowKind::Inj2: {
      Formula whole = Formula::disj(t.a(), t.b());
      int j = t.kind() == ArrowKind::Inj1 ? 1 : 2;
      return inj_r(j, whole, identity(component(whole, j)));
    }
    case ArrowKind::Pair:
      return pair_r(translate(t.first()), translate(t.second()));
    case ArrowKind::Copair:
      return case_l(translate(t.first()), translate(t.second()));
    case ArrowKind::Comp:
      return cut(translate(t.second()), translate(t.first()));
    default:
      throw FragmentError("constructor '" + std::string(to_string(t.kind())) +
                          "' is outside the conjdisj rewriting system");
  }
}

ArrowTerm to_arrow(const ProofPtr& x) {
  switch (x->rule) {
    case Rule::Atom:
      return ArrowTerm::id(x->dom);
    case Rule::PairR:
      return ArrowTerm::pair(to_arrow(x->a), to_arrow(x->b));
    case Rule::CaseL:
      return ArrowTerm::copair(to_arrow(x->a), to_arrow(x->b));
    case Rule::ProjL: {
      ArrowTerm p = x->index == 1 ? ArrowTerm::proj1(x->dom.left(), x->dom.right())
                                  : ArrowTerm::proj2(x->dom.left(), x->dom.right());
      return ArrowTerm::comp(to_arrow(x->a), p);
    }
    case Rule::InjR: {
      ArrowTerm i = x->index == 1 ? ArrowTerm::inj1(x->cod.left(), x->cod.right())
                                  : ArrowTerm::inj2(x->cod.left(), x->cod.right());
      return ArrowTerm::comp(i, to_arrow(x->a));
    }
  }
  throw Error("internal: bad proof rule");
}

}  // namespace

struct ConjDisjRewriter::Impl {
  std::unordered_map<const void*, std::pair<ArrowTerm, ProofPtr>> cache;

  ProofPtr normal(const ArrowTerm& t) {
    if (auto it = cache.find(t.identity()); it != cache.end()) return it->second.second;
    ProofPtr out;
    switch (t.kind()) {
      case ArrowKind::Pair:
        out = pair_r(normal(t.first()), normal(t.second()));
        break;
      case ArrowKind::Copair:
        out = canon(case_l(normal(t.first()), normal(t.second())));
        break;
      case ArrowKind::Comp:
        out = canon(cut(normal(t.second()), normal(t.first())));
        break;
      default:
        out = canon(translate(t));
    }
    // The cached ArrowTerm keeps the node alive so its address stays unique.
    cache.emplace(t.identity(), std::pair{t, out});
    return out;
  }
};

ConjDisjRewriter::ConjDisjRewriter() : impl_(std::make_unique<Impl>()) {}
ConjDisjRewriter::~ConjDisjRewriter() = default;
ConjDisjRewriter::ConjDisjRewriter(ConjDisjRewriter&&) noexcept = default;
ConjDisjRewriter& ConjDisjRewriter::operator=(ConjDisjRewriter&&) noexcept = default;

ArrowTerm ConjDisjRewriter::normal_form(const ArrowTerm& t) {
  check_fragment(t, Fragment::ConjDisj);
  infer_type(t);
  return to_arrow(impl_->normal(t));
}

std::string ConjDisjRewriter::key(const ArrowTerm& t) { return render(normal_form(t)); }

ArrowTerm conjdisj_normal_form(const ArrowTerm& t) { return ConjDisjRewriter{}.normal_form(t); }

bool equal_by_rewriting(const ArrowTerm& f, const ArrowTerm& g) {
  if (!(infer_type(f) == infer_type(g))) throw TypeError("terms have different types", "root");
  ConjDisjRewriter r;
  return r.normal_form(f) == r.normal_form(g);
}

}  // namespace proofid
