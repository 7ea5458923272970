#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "proofid/arrow.hpp"
#include "proofid/enumerate.hpp"

namespace proofid {

// Terms are kept as their text renderings so that demos over lambda terms
// fit the same shape.
struct Violation {
  std::string f;
  std::string g;
  bool verdict_norm;  // equal under the reference (proof-theoretic) equality
  bool verdict_gen;   // equal generality
};

struct Witness {
  std::string lhs;
  std::string rhs;
  std::string note;
  std::size_t depth = 0;
};

// Outcome of a coherence check, maximality probe or demo. Violations are
// empty iff the checked property held on everything examined.
struct Report {
  std::string title;
  std::uint64_t checked_pairs = 0;
  std::vector<Violation> violations;
  std::vector<Witness> witnesses;
  // Extra artifacts in insertion order (demo terms, statistics).
  std::vector<std::pair<std::string, std::string>> notes;
  std::chrono::nanoseconds elapsed{0};

  bool holds() const { return violations.empty(); }
  // Compares everything but elapsed.
  bool same_content(const Report& other) const;
};

// Elapsed time is left out unless asked for, keeping output deterministic.
std::string render_text(const Report& r, bool with_timing = false);
std::string render_structured(const Report& r, bool with_timing = false);

// For every same-type pair of enumerated terms compares the reference
// equality (beta-eta for CART, the rewriting normalizer for CONJDISJ) with
// equality of generality. Pairs are compared through the two partitions of
// each hom-set, so checked_pairs counts pairs covered.
Report check_star(const EnumConfig& cfg);

// The two CCC terms that are beta-eta equal but whose principal types are
// not renaming-equivalent.
Report demo_ccc_divergence();

// Closes the seed equation f = g under substitution instances, congruence
// with enumerated contexts and normalization, and reports forced equalities
// between generality-distinct arrows. Throws PreconditionError on a seed
// outside CART, of mismatched types, or already a theorem.
Report probe_maximality(const ArrowTerm& f, const ArrowTerm& g, const EnumConfig& cfg, std::size_t depth);

// Fixed registry of worked examples.
std::vector<std::string> demo_names();
// Throws PreconditionError on an unknown name.
Report run_demo(const std::string& name);

}  // namespace proofid
