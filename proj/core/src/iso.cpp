#include "proofid/iso.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "proofid/enumerate.hpp"
#include "proofid/error.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

Formula conjoin(std::vector<Formula> factors) {
  std::sort(factors.begin(), factors.end());
  if (factors.empty()) return Formula::top();
  Formula out = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) out = Formula::conj(factors[i], out);
  return out;
}

bool only(const Formula& a, std::initializer_list<Connective> allowed) {
  if (std::find(allowed.begin(), allowed.end(), a.kind()) == allowed.end()) return false;
  if (a.is(Connective::Conj) || a.is(Connective::Disj) || a.is(Connective::Impl)) {
    return only(a.left(), allowed) && only(a.right(), allowed);
  }
  return true;
}

void monoid_factors(const Formula& a, std::vector<Formula>& out) {
  if (a.is(Connective::Letter)) out.push_back(a);
  if (a.is(Connective::Conj)) {
    monoid_factors(a.left(), out);
    monoid_factors(a.right(), out);
  }
}

// Factors are a letter behind a sorted premise list p1 -> (p2 -> ... -> x).
Formula make_factor(std::vector<Formula> premises, const Formula& head) {
  std::sort(premises.begin(), premises.end());
  Formula out = head;
  for (std::size_t i = premises.size(); i-- > 0;) out = Formula::impl(premises[i], out);
  return out;
}

std::vector<Formula> hsi_factors(const Formula& a) {
  switch (a.kind()) {
    case Connective::Letter:
      return {a};
    case Connective::Top:
      return {};
    case Connective::Conj: {
      auto l = hsi_factors(a.left());
      auto r = hsi_factors(a.right());
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Connective::Impl: {
      auto premises = hsi_factors(a.left());
      std::vector<Formula> out;
      for (Formula f : hsi_factors(a.right())) {
        std::vector<Formula> ps = premises;
        while (f.is(Connective::Impl)) {
          ps.push_back(f.left());
          f = f.right();
        }
        out.push_back(make_factor(std::move(ps), f));
      }
      return out;
    }
    default:
      throw FragmentError("formula " + render(a) + " is outside {&, ->, T}");
  }
}

enum class IsoFragment { Monoid, Hsi, Dual };

IsoFragment classify(const Formula& a, const Formula& b) {
  using C = Connective;
  if (only(a, {C::Letter, C::Top, C::Conj}) && only(b, {C::Letter, C::Top, C::Conj})) return IsoFragment::Monoid;
  if (only(a, {C::Letter, C::Top, C::Conj, C::Impl}) && only(b, {C::Letter, C::Top, C::Conj, C::Impl})) {
    return IsoFragment::Hsi;
  }
  if (only(a, {C::Letter, C::Bot, C::Disj}) && only(b, {C::Letter, C::Bot, C::Disj})) return IsoFragment::Dual;
  throw FragmentError("no isomorphism decision procedure for " + render(a) + " and " + render(b));
}

void subformulas(const Formula& a, std::vector<Formula>& out) {
  if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  if (a.is(Connective::Conj) || a.is(Connective::Impl)) {
    subformulas(a.left(), out);
    subformulas(a.right(), out);
  }
}

}  // namespace

IsoNormalForm monoid_normal_form(const Formula& a) {
  using C = Connective;
  if (!only(a, {C::Letter, C::Top, C::Conj})) throw FragmentError("formula " + render(a) + " is outside {&, T}");
  std::vector<Formula> factors;
  monoid_factors(a, factors);
  return {conjoin(std::move(factors))};
}

IsoNormalForm hsi_normal_form(const Formula& a) {
  using C = Connective;
  if (!only(a, {C::Letter, C::Top, C::Conj, C::Impl})) {
    throw FragmentError("formula " + render(a) + " is outside {&, ->, T}");
  }
  return {conjoin(hsi_factors(a))};
}

Formula dualize(const Formula& a) {
  switch (a.kind()) {
    case Connective::Letter:
      return a;
    case Connective::Bot:
      return Formula::top();
    case Connective::Disj:
      return Formula::conj(dualize(a.left()), dualize(a.right()));
    default:
      throw FragmentError("formula " + render(a) + " is outside {|, F}");
  }
}

bool iso_check(const Formula& a, const Formula& b) {
  switch (classify(a, b)) {
    case IsoFragment::Monoid:
      return monoid_normal_form(a) == monoid_normal_form(b);
    case IsoFragment::Hsi:
      return hsi_normal_form(a) == hsi_normal_form(b);
    case IsoFragment::Dual:
      return monoid_normal_form(dualize(a)) == monoid_normal_form(dualize(b));
  }
  return false;
}

std::optional<IsoWitness> find_iso_witness(const Formula& a, const Formula& b, std::size_t size_bound,
                                           const IsoSearchOptions& options) {
  const auto frag = classify(a, b);
  if (frag == IsoFragment::Dual) throw FragmentError("witness search needs cart or ccc formulas");

  EnumConfig cfg;
  cfg.fragment = frag == IsoFragment::Monoid ? Fragment::Cart : Fragment::Ccc;
  cfg.max_term_size = size_bound;
  cfg.dedup_by_normal_form = true;
  cfg.max_factors = options.max_factors;
  cfg.max_terms_per_hom_set = options.max_terms_per_hom_set;
  std::vector<Formula> basis;
  subformulas(a, basis);
  subformulas(b, basis);
  if (std::find(basis.begin(), basis.end(), Formula::top()) == basis.end()) basis.push_back(Formula::top());
  std::stable_sort(basis.begin(), basis.end(), [](const Formula& x, const Formula& y) {
    if (x.connectives() != y.connectives()) return x.connectives() < y.connectives();
    return x < y;
  });
  cfg.factor_basis = std::move(basis);

  // Grows both hom-sets one size at a time, so small witnesses are found
  // before larger terms are enumerated. Pairs are visited by the larger of
  // the two sizes, then by enumeration index.
  Enumerator e(cfg);
  auto& norm = e.normalization();
  const std::string id_a = norm.key(ArrowTerm::id(a));
  const std::string id_b = norm.key(ArrowTerm::id(b));
  std::vector<ArrowTerm> forward;
  std::vector<ArrowTerm> backward;
  std::size_t checks = 0;
  auto inverse = [&](const ArrowTerm& f, const ArrowTerm& g) {
    if (++checks > options.max_pair_checks) {
      throw BoundError("witness search exceeds " + std::to_string(options.max_pair_checks) + " pair checks");
    }
    return norm.transient_key(ArrowTerm::comp(g, f)) == id_a && norm.transient_key(ArrowTerm::comp(f, g)) == id_b;
  };
  auto grow = [&](std::vector<ArrowTerm>& into, const Formula& dom, const Formula& cod, std::size_t size) {
    const std::size_t before = into.size();
    for (const auto& x : e.from(dom, size)) {
      if (x.cod == cod) into.push_back(x.term);
    }
    if (into.size() > cfg.max_terms_per_hom_set) {
      throw BoundError("hom-set exceeds " + std::to_string(cfg.max_terms_per_hom_set) + " terms");
    }
    return before;
  };
  for (std::size_t size = 1; size <= size_bound; ++size) {
    const std::size_t old_f = grow(forward, a, b, size);
    const std::size_t old_g = grow(backward, b, a, size);
    for (std::size_t i = 0; i < forward.size(); ++i) {
      // Old forward terms only meet new backward terms.
      for (std::size_t j = i < old_f ? old_g : 0; j < backward.size(); ++j) {
        if (inverse(forward[i], backward[j])) return IsoWitness{forward[i], backward[j]};
      }
    }
  }
  return std::nullopt;
}

std::optional<Natural> arithmetic_value(const Formula& a, const std::map<std::string, unsigned>& assignment,
                                        std::size_t max_bits) {
  auto fits = [&](const Natural& n) { return boost::multiprecision::msb(n + 1) < max_bits; };
  switch (a.kind()) {
    case Connective::Letter: {
      auto it = assignment.find(a.name());
      if (it == assignment.end()) throw PreconditionError("no value for letter '" + a.name() + "'");
      return Natural(it->second);
    }
    case Connective::Top:
      return Natural(1);
    case Connective::Bot:
      return Natural(0);
    default:
      break;
  }
  auto l = arithmetic_value(a.left(), assignment, max_bits);
  auto r = arithmetic_value(a.right(), assignment, max_bits);
  if (!l || !r) return std::nullopt;
  Natural out;
  if (a.is(Connective::Conj)) {
    out = *l * *r;
  } else if (a.is(Connective::Disj)) {
    out = *l + *r;
  } else {
    // r^l, refusing results past max_bits before computing them.
    const Natural& base = *r;
    const Natural& exp = *l;
    if (exp == 0 || base == 1) return Natural(1);
    if (base == 0) return Natural(0);
    if (exp > max_bits) return std::nullopt;
    const auto e = exp.convert_to<unsigned>();
    if ((boost::multiprecision::msb(base) + 1) * static_cast<std::size_t>(e) > max_bits + 64) return std::nullopt;
    out = boost::multiprecision::pow(base, e);
  }
  if (!fits(out)) return std::nullopt;
  return out;
}

}  // namespace proofid
