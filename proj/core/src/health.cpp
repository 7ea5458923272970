#include "proofid/health.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "proofid/error.hpp"
#include "proofid/lambda_engine.hpp"
#include "proofid/render.hpp"

namespace proofid {

namespace {

class Generator {
 public:
  Generator(std::mt19937_64& rng, const RandomTermOptions& options) : rng_(rng), options_(options) {
    if (options_.letters.empty()) throw PreconditionError("random terms need at least one letter");
  }

  Formula type(int depth) {
    int pick = below(depth <= 0 ? 5 : 9);
    if (pick == 0) return Formula::top();
    if (pick < 5) return Formula::letter(options_.letters[below(static_cast<int>(options_.letters.size()))]);
    if (pick < 7) return Formula::conj(type(depth - 1), type(depth - 1));
    return Formula::impl(type(depth - 1), type(depth - 1));
  }

  LambdaTerm term(const Formula& ty, int depth) {
    if (depth <= 0) {
      if (auto v = variable(ty); v && below(2) == 0) return *v;
      return intro(ty, 0);
    }
    const int pick = below(10);
    if (pick < 2) {
      if (auto v = variable(ty)) return *v;
    }
    if (pick < 4) {
      Formula x_type = type(1);
      std::string x = bind(x_type);
      LambdaTerm body = term(ty, depth - 1);
      ctx_.pop_back();
      return LambdaTerm::app(LambdaTerm::abs(x, x_type, body), term(x_type, depth - 1));
    }
    if (pick == 4) return LambdaTerm::fst(term(Formula::conj(ty, type(1)), depth - 1));
    if (pick == 5) return LambdaTerm::snd(term(Formula::conj(type(1), ty), depth - 1));
    if (pick == 6 && !ty.is(Connective::Letter)) {
      // Eliminate a function built on the spot.
      Formula x_type = type(1);
      return LambdaTerm::app(term(Formula::impl(x_type, ty), depth - 1), term(x_type, depth - 1));
    }
    return intro(ty, depth);
  }

 private:
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::optional<LambdaTerm> variable(const Formula& ty) {
    std::vector<const std::pair<std::string, Formula>*> hits;
    for (const auto& v : ctx_) {
      if (v.second == ty) hits.push_back(&v);
    }
    if (hits.empty()) return std::nullopt;
    const auto* v = hits[below(static_cast<int>(hits.size()))];
    return LambdaTerm::var(v->first, v->second);
  }

  std::string bind(const Formula& ty) {
    std::string name = "x" + std::to_string(bound_++);
    ctx_.emplace_back(name, ty);
    return name;
  }

  LambdaTerm intro(const Formula& ty, int depth) {
    switch (ty.kind()) {
      case Connective::Top:
        return LambdaTerm::unit();
      case Connective::Conj:
        return LambdaTerm::mk_pair(term(ty.left(), depth - 1), term(ty.right(), depth - 1));
      case Connective::Impl: {
        std::string x = bind(ty.left());
        LambdaTerm body = term(ty.right(), depth - 1);
        ctx_.pop_back();
        return LambdaTerm::abs(x, ty.left(), body);
      }
      default:
        if (auto v = variable(ty)) return *v;
        if (depth > 0) return term(ty, depth - 1);
        return LambdaTerm::var("z" + std::to_string(free_++), ty);
    }
  }

  std::mt19937_64& rng_;
  const RandomTermOptions& options_;
  std::vector<std::pair<std::string, Formula>> ctx_;
  int bound_ = 0;
  int free_ = 0;
};

}  // namespace

LambdaTerm random_lambda(std::mt19937_64& rng, const Formula& type, const RandomTermOptions& options) {
  Generator g(rng, options);
  return g.term(type, options.max_term_depth);
}

Formula random_type(std::mt19937_64& rng, const RandomTermOptions& options) {
  Generator g(rng, options);
  return g.type(options.max_type_depth);
}

HealthReport normalizer_health(std::uint64_t seed, std::uint64_t count, const RandomTermOptions& options) {
  std::mt19937_64 rng(seed);
  HealthReport report;
  auto fail = [&](std::uint64_t& counter, const std::string& what, const LambdaTerm& t) {
    ++counter;
    if (report.first_failure.empty()) report.first_failure = what + ": " + render(t);
  };
  for (std::uint64_t i = 0; i < count; ++i) {
    Formula ty = random_type(rng, options);
    LambdaTerm t = random_lambda(rng, ty, options);
    ++report.terms;
    try {
      if (!(beta_normalize(t) == t)) ++report.redexes_seen;
      LambdaTerm n = normalize(t, Strategy::Eager);
      if (!(type_of(n) == ty)) fail(report.subject_reduction_failures, "type changed", t);
      LambdaTerm key = alpha_canonical(n);
      if (!(alpha_canonical(normalize(n)) == key)) fail(report.idempotence_failures, "not idempotent", t);
      for (auto s : {Strategy::NormalOrder, Strategy::Applicative}) {
        if (!(alpha_canonical(normalize(t, s)) == key)) {
          fail(report.strategy_failures, "strategies disagree", t);
          break;
        }
      }
    } catch (const Error& e) {
      fail(report.subject_reduction_failures, std::string("error ") + e.what(), t);
    }
  }
  return report;
}

std::string render(const HealthReport& r) {
  std::ostringstream out;
  out << "terms: " << r.terms << "\n"
      << "with redexes: " << r.redexes_seen << "\n"
      << "subject reduction failures: " << r.subject_reduction_failures << "\n"
      << "idempotence failures: " << r.idempotence_failures << "\n"
      << "strategy disagreements: " << r.strategy_failures << "\n";
  if (!r.first_failure.empty()) out << "first failure: " << r.first_failure << "\n";
  return out.str();
}

}  // namespace proofid
