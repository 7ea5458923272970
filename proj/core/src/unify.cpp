#include <map>
#include <vector>

#include "proofid/error.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

bool occurs(const std::string& var, const Formula& f) {
  switch (f.kind()) {
    case Connective::Letter: return f.name() == var;
    case Connective::Top:
    case Connective::Bot: return false;
    default: return occurs(var, f.left()) || occurs(var, f.right());
  }
}

Formula rebuild(const Formula& f, const Formula& l, const Formula& r) {
  switch (f.kind()) {
    case Connective::Conj: return Formula::conj(l, r);
    case Connective::Disj: return Formula::disj(l, r);
    default: return Formula::impl(l, r);
  }
}

Formula replace(const Formula& f, const std::map<std::string, Formula>& map) {
  switch (f.kind()) {
    case Connective::Letter: {
      auto it = map.find(f.name());
      return it == map.end() ? f : it->second;
    }
    case Connective::Top:
    case Connective::Bot:
      return f;
    default:
      return rebuild(f, replace(f.left(), map), replace(f.right(), map));
  }
}

}  // namespace

Formula Substitution::apply(const Formula& f) const {
  if (map_.empty()) return f;
  return replace(f, map_);
}

void Substitution::bind(const std::string& var, const Formula& f) {
  Formula target = apply(f);
  if (target.is(Connective::Letter) && target.name() == var) return;
  if (occurs(var, target)) {
    throw UnificationError("occurs check: " + var + " occurs in " + render(target));
  }
  std::map<std::string, Formula> single{{var, target}};
  for (auto& [name, rhs] : map_) rhs = replace(rhs, single);
  map_.insert_or_assign(var, target);
}

Substitution unify(const Formula& a, const Formula& b, const std::set<std::string>& rigid,
                   ConstraintTrace* trace) {
  Substitution s;
  std::vector<std::pair<Formula, Formula>> work{{a, b}};
  auto flexible = [&](const Formula& f) {
    return f.is(Connective::Letter) && !rigid.count(f.name());
  };
  while (!work.empty()) {
    auto [x0, y0] = work.back();
    work.pop_back();
    if (trace) trace->emplace_back(x0, y0);
    Formula x = s.apply(x0);
    Formula y = s.apply(y0);
    if (x == y) continue;
    if (flexible(x)) {
      s.bind(x.name(), y);
    } else if (flexible(y)) {
      s.bind(y.name(), x);
    } else if (x.kind() == y.kind() && !x.is(Connective::Letter) && !x.is(Connective::Top) &&
               !x.is(Connective::Bot)) {
      work.emplace_back(x.right(), y.right());
      work.emplace_back(x.left(), y.left());
    } else {
      throw UnificationError("cannot unify " + render(x) + " with " + render(y));
    }
  }
  return s;
}

namespace {

class Inference {
 public:
  TypingReport run(const LambdaTerm& t) {
    Formula type = infer(t);
    return {rename_canonically(subst_.apply(type)), std::move(trace_)};
  }

 private:
  Formula fresh() { return Formula::letter("u" + std::to_string(counter_++)); }

  Formula freshen(const Formula& f) {
    switch (f.kind()) {
      case Connective::Letter: return fresh();
      case Connective::Top: return f;
      case Connective::Bot:
        throw UnificationError("F has no product/function/unit reading");
      case Connective::Disj:
        throw UnificationError("| has no product/function/unit reading");
      default: return rebuild(f, freshen(f.left()), freshen(f.right()));
    }
  }

  void constrain(const Formula& a, const Formula& b) {
    ConstraintTrace local;
    Substitution mgu = unify(subst_.apply(a), subst_.apply(b), {}, &local);
    trace_.insert(trace_.end(), local.begin(), local.end());
    for (const auto& [var, rhs] : mgu.bindings()) subst_.bind(var, rhs);
  }

  Formula infer(const LambdaTerm& t) {
    switch (t.kind()) {
      case LambdaKind::Var: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        auto [it, fresh_entry] = free_.try_emplace(t.name(), Formula::top());
        if (fresh_entry) it->second = freshen(t.type_annotation());
        return it->second;
      }
      case LambdaKind::Abs: {
        Formula bound = freshen(t.type_annotation());
        scope_.emplace_back(t.name(), bound);
        Formula body = infer(t.body());
        scope_.pop_back();
        return Formula::impl(bound, body);
      }
      case LambdaKind::App: {
        Formula f = infer(t.fun());
        Formula a = infer(t.arg());
        Formula result = fresh();
        constrain(f, Formula::impl(a, result));
        return result;
      }
      case LambdaKind::MkPair: {
        Formula a = infer(t.first());
        return Formula::conj(a, infer(t.second()));
      }
      case LambdaKind::Fst:
      case LambdaKind::Snd: {
        Formula p = infer(t.first());
        Formula l = fresh();
        Formula r = fresh();
        constrain(p, Formula::conj(l, r));
        return t.is(LambdaKind::Fst) ? l : r;
      }
      case LambdaKind::Unit:
        return Formula::top();
    }
    return Formula::top();
  }

  Substitution subst_;
  ConstraintTrace trace_;
  std::vector<std::pair<std::string, Formula>> scope_;
  std::map<std::string, Formula> free_;
  int counter_ = 0;
};

std::string canonical_letter(std::size_t index) {
  std::string name(1, static_cast<char>('a' + index % 26));
  if (index >= 26) name += std::to_string(index / 26);
  return name;
}

}  // namespace

TypingReport principal_type(const LambdaTerm& skeleton) { return Inference{}.run(skeleton); }

Formula rename_canonically(const Formula& f) {
  std::map<std::string, Formula> map;
  for (const auto& name : letters(f)) {
    map.emplace(name, Formula::letter(canonical_letter(map.size())));
  }
  return replace(f, map);
}

bool renaming_equivalent(const Formula& a, const Formula& b) {
  return rename_canonically(a) == rename_canonically(b);
}

namespace {

bool match(const Formula& g, const Formula& s, std::map<std::string, Formula>& map) {
  if (g.is(Connective::Letter)) {
    auto [it, inserted] = map.try_emplace(g.name(), s);
    return inserted || it->second == s;
  }
  if (g.kind() != s.kind()) return false;
  if (g.is(Connective::Top) || g.is(Connective::Bot)) return true;
  return match(g.left(), s.left(), map) && match(g.right(), s.right(), map);
}

}  // namespace

bool is_instance(const Formula& general, const Formula& specific) {
  std::map<std::string, Formula> map;
  return match(general, specific, map);
}

}  // namespace proofid
