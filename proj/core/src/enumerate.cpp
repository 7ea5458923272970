#include "proofid/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "proofid/error.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

// Fewest basis factors whose conjunction is f (0 if impossible).
std::size_t factor_count(const Formula& f, const std::vector<Formula>& basis) {
  if (std::find(basis.begin(), basis.end(), f) != basis.end()) return 1;
  if (!f.is(Connective::Conj)) return 0;
  std::size_t l = factor_count(f.left(), basis);
  std::size_t r = l == 0 ? 0 : factor_count(f.right(), basis);
  return r == 0 ? 0 : l + r;
}

}  // namespace

void EnumConfig::validate() const {
  if (max_term_size < 1) throw PreconditionError("term size bound must be at least 1");
  if (dedup_by_normal_form && fragment != Fragment::Cart && fragment != Fragment::Ccc) {
    throw PreconditionError("deduplication by normal form requires cart or ccc");
  }
  if (!factor_basis.empty()) {
    if (max_factors < 1) throw PreconditionError("factor bound must be at least 1");
    for (const auto& b : factor_basis) {
      if (!is_legal(b, fragment)) throw PreconditionError("basis formula " + render(b) + " is outside the fragment");
    }
    return;
  }
  if (max_formula_connectives < 1) throw PreconditionError("formula connective bound must be at least 1");
  if (letter_pool.empty()) throw PreconditionError("letter pool is empty");
  for (const auto& l : letter_pool) {
    if (!is_valid_letter_name(l)) throw PreconditionError("invalid letter name '" + l + "'");
  }
}

bool EnumConfig::admits(const Formula& f) const {
  if (!factor_basis.empty()) {
    std::size_t n = factor_count(f, factor_basis);
    return n != 0 && n <= max_factors && is_legal(f, fragment);
  }
  if (f.connectives() > max_formula_connectives || !is_legal(f, fragment)) return false;
  for (const auto& l : letters(f)) {
    if (std::find(letter_pool.begin(), letter_pool.end(), l) == letter_pool.end()) return false;
  }
  return true;
}

std::vector<Formula> formula_universe(const EnumConfig& cfg) {
  cfg.validate();
  if (!cfg.factor_basis.empty()) {
    std::vector<std::vector<Formula>> levels(cfg.max_factors + 1);
    std::set<Formula> seen;
    for (const auto& b : cfg.factor_basis) {
      if (seen.insert(b).second) levels[1].push_back(b);
    }
    for (std::size_t n = 2; n <= cfg.max_factors; ++n) {
      for (std::size_t l = 1; l < n; ++l) {
        for (const auto& a : levels[l]) {
          for (const auto& b : levels[n - l]) {
            auto c = Formula::conj(a, b);
            if (seen.insert(c).second) levels[n].push_back(c);
          }
        }
      }
    }
    std::vector<Formula> out;
    for (auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    return out;
  }
  std::vector<std::vector<Formula>> levels(cfg.max_formula_connectives + 1);
  for (const auto& l : cfg.letter_pool) levels[0].push_back(Formula::letter(l));
  if (is_legal(Formula::top(), cfg.fragment)) levels[0].push_back(Formula::top());

  std::vector<Connective> ops;
  for (auto c : {Connective::Conj, Connective::Disj, Connective::Impl}) {
    auto probe = Formula::letter(cfg.letter_pool.front());
    Formula f = c == Connective::Conj   ? Formula::conj(probe, probe)
                : c == Connective::Disj ? Formula::disj(probe, probe)
                                        : Formula::impl(probe, probe);
    if (is_legal(f, cfg.fragment)) ops.push_back(c);
  }
  for (std::size_t n = 1; n <= cfg.max_formula_connectives; ++n) {
    for (auto c : ops) {
      for (std::size_t l = 0; l < n; ++l) {
        for (const auto& a : levels[l]) {
          for (const auto& b : levels[n - 1 - l]) {
            levels[n].push_back(c == Connective::Conj   ? Formula::conj(a, b)
                                : c == Connective::Disj ? Formula::disj(a, b)
                                                        : Formula::impl(a, b));
          }
        }
      }
    }
  }
  std::vector<Formula> out;
  for (auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// ---- normalization cache --------------------------------------------------

LambdaTerm NormalizationCache::compute(const ArrowTerm& t) {
  switch (t.kind()) {
    case ArrowKind::Comp: {
      const auto& g = normal(t.first());
      const auto& f = normal(t.second());
      const Formula& a = f.type_annotation();
      auto x = LambdaTerm::var("x", a);
      return normalize(LambdaTerm::abs("x", a, LambdaTerm::app(g, LambdaTerm::app(f, x))));
    }
    case ArrowKind::Pair: {
      const auto& f = normal(t.first());
      const auto& g = normal(t.second());
      const Formula& a = f.type_annotation();
      auto x = LambdaTerm::var("x", a);
      return normalize(
          LambdaTerm::abs("x", a, LambdaTerm::mk_pair(LambdaTerm::app(f, x), LambdaTerm::app(g, x))));
    }
    case ArrowKind::Curry: {
      const auto& f = normal(t.first());
      const Formula& ab = f.type_annotation();
      if (!ab.is(Connective::Conj)) throw TypeError("curry needs a conjunctive domain", "root.curry");
      auto x = LambdaTerm::var("x", ab.left());
      auto y = LambdaTerm::var("y", ab.right());
      return normalize(LambdaTerm::abs(
          "x", ab.left(), LambdaTerm::abs("y", ab.right(), LambdaTerm::app(f, LambdaTerm::mk_pair(x, y)))));
    }
    default:
      return normalize(to_lambda(t));
  }
}

const NormalizationCache::Entry& NormalizationCache::entry(const ArrowTerm& t) {
  if (auto it = cache_.find(t.identity()); it != cache_.end()) return it->second;
  auto nf = compute(t);
  auto key = render(alpha_canonical(nf));
  return cache_.emplace(t.identity(), Entry{t, std::move(nf), std::move(key)}).first->second;
}

const std::string& NormalizationCache::key(const ArrowTerm& t) { return entry(t).key; }

const LambdaTerm& NormalizationCache::normal(const ArrowTerm& t) { return entry(t).normal; }

std::string NormalizationCache::transient_key(const ArrowTerm& t) {
  if (auto it = cache_.find(t.identity()); it != cache_.end()) return it->second.key;
  return render(alpha_canonical(compute(t)));
}

// ---- enumerator -----------------------------------------------------------

Enumerator::Enumerator(EnumConfig cfg) : cfg_(std::move(cfg)) { universe_ = formula_universe(cfg_); }

bool Enumerator::accept_representative(const Formula& dom, const ArrowTerm& t) {
  if (!cfg_.dedup_by_normal_form) return true;
  return seen_keys_[dom].insert(norm_.key(t)).second;
}

void Enumerator::generate(const Formula& dom, std::size_t size,
                          const std::function<void(TypedArrow)>& emit) {
  const Fragment fr = cfg_.fragment;
  auto put = [&](ArrowTerm t, Formula cod) {
    if (accept_representative(dom, t)) emit(TypedArrow{std::move(t), std::move(cod)});
  };

  if (size == 1) {
    put(ArrowTerm::id(dom), dom);
    if (is_legal(ArrowKind::Bang, fr)) put(ArrowTerm::bang(dom), Formula::top());
    if (dom.is(Connective::Conj)) {
      put(ArrowTerm::proj1(dom.left(), dom.right()), dom.left());
      put(ArrowTerm::proj2(dom.left(), dom.right()), dom.right());
    }
    if (is_legal(ArrowKind::Inj1, fr)) {
      for (const auto& b : universe_) {
        auto s = Formula::disj(dom, b);
        if (cfg_.admits(s)) put(ArrowTerm::inj1(dom, b), s);
      }
      for (const auto& b : universe_) {
        auto s = Formula::disj(b, dom);
        if (cfg_.admits(s)) put(ArrowTerm::inj2(b, dom), s);
      }
    }
    if (is_legal(ArrowKind::Eval, fr) && dom.is(Connective::Conj) && dom.left().is(Connective::Impl) &&
        dom.left().left() == dom.right()) {
      put(ArrowTerm::eval(dom.right(), dom.left().right()), dom.left().right());
    }
    if (is_legal(ArrowKind::Zero, fr)) {
      for (const auto& b : universe_) put(ArrowTerm::zero(dom, b), b);
    }
    return;
  }

  // Binary constructors split the remaining size between two children.
  for (std::size_t a = 1; a + 1 < size; ++a) {
    const std::size_t b = size - 1 - a;
    for (const auto& f : from(dom, a)) {
      for (const auto& g : from(f.cod, b)) put(ArrowTerm::comp(g.term, f.term), g.cod);
    }
  }
  for (std::size_t a = 1; a + 1 < size; ++a) {
    const std::size_t b = size - 1 - a;
    for (const auto& f : from(dom, a)) {
      for (const auto& g : from(dom, b)) {
        auto c = Formula::conj(f.cod, g.cod);
        if (cfg_.admits(c)) put(ArrowTerm::pair(f.term, g.term), c);
      }
    }
  }
  if (is_legal(ArrowKind::Copair, fr) && dom.is(Connective::Disj)) {
    for (std::size_t a = 1; a + 1 < size; ++a) {
      const std::size_t b = size - 1 - a;
      for (const auto& f : from(dom.left(), a)) {
        for (const auto& g : from(dom.right(), b)) {
          if (f.cod == g.cod) put(ArrowTerm::copair(f.term, g.term), f.cod);
        }
      }
    }
  }
  if (is_legal(ArrowKind::Curry, fr)) {
    for (const auto& x : universe_) {
      auto ax = Formula::conj(dom, x);
      if (!cfg_.admits(ax)) continue;
      for (const auto& f : from(ax, size - 1)) {
        auto c = Formula::impl(x, f.cod);
        if (cfg_.admits(c)) put(ArrowTerm::curry(f.term), c);
      }
    }
  }
  if (is_legal(ArrowKind::Sum, fr)) {
    for (std::size_t a = 1; a + 1 < size; ++a) {
      const std::size_t b = size - 1 - a;
      for (const auto& f : from(dom, a)) {
        for (const auto& g : from(dom, b)) {
          if (f.cod == g.cod) put(ArrowTerm::sum(f.term, g.term), f.cod);
        }
      }
    }
  }
}

const std::vector<TypedArrow>& Enumerator::from(const Formula& dom, std::size_t size) {
  static const std::vector<TypedArrow> none;
  if (size == 0 || size > cfg_.max_term_size || !cfg_.admits(dom)) return none;
  auto& by_size = memo_[dom];
  if (auto it = by_size.find(size); it != by_size.end()) return it->second;
  std::vector<TypedArrow> out;
  generate(dom, size, [&](TypedArrow t) { out.push_back(std::move(t)); });
  return memo_[dom].emplace(size, std::move(out)).first->second;
}

void Enumerator::for_each_from(const Formula& dom, std::size_t size,
                               const std::function<void(const TypedArrow&)>& visit) {
  if (size == 0 || size > cfg_.max_term_size || !cfg_.admits(dom)) return;
  // Representatives depend on what was seen before, so dedup runs must not
  // regenerate a level.
  if (cfg_.dedup_by_normal_form) {
    for (const auto& t : from(dom, size)) visit(t);
    return;
  }
  if (auto it = memo_.find(dom); it != memo_.end()) {
    if (auto jt = it->second.find(size); jt != it->second.end()) {
      for (const auto& t : jt->second) visit(t);
      return;
    }
  }
  generate(dom, size, [&](TypedArrow t) { visit(t); });
}

std::vector<ArrowTerm> Enumerator::hom_set(const Formula& dom, const Formula& cod) {
  std::vector<ArrowTerm> out;
  if (!cfg_.admits(cod)) return out;
  for (std::size_t s = 1; s <= cfg_.max_term_size; ++s) {
    auto visit = [&](const TypedArrow& t) {
      if (t.cod != cod) return;
      out.push_back(t.term);
      if (out.size() > cfg_.max_terms_per_hom_set) {
        throw BoundError("hom-set " + render(dom) + " => " + render(cod) + " exceeds " +
                         std::to_string(cfg_.max_terms_per_hom_set) + " terms");
      }
    };
    if (s < cfg_.max_term_size) {
      for (const auto& t : from(dom, s)) visit(t);
    } else {
      for_each_from(dom, s, visit);
    }
  }
  return out;
}

std::vector<ArrowTerm> enumerate_arrows(const EnumConfig& cfg, const Formula& dom, const Formula& cod) {
  cfg.validate();
  if (!cfg.admits(dom)) throw PreconditionError("domain " + render(dom) + " is outside the enumeration bounds");
  if (!cfg.admits(cod)) throw PreconditionError("codomain " + render(cod) + " is outside the enumeration bounds");
  Enumerator e(cfg);
  return e.hom_set(dom, cod);
}

}  // namespace proofid
