#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/generality.hpp"

namespace proofid {

// Canonical representative of an isomorphism class. Conjunctions are
// right-nested over factors sorted by the formula order; the empty
// conjunction is T.
struct IsoNormalForm {
  Formula canonical;
  friend bool operator==(const IsoNormalForm&, const IsoNormalForm&) = default;
};

// Commutative-monoid normal form: the multiset of letters. Accepts only
// letters, & and T; throws FragmentError otherwise.
IsoNormalForm monoid_normal_form(const Formula& a);

// Normal form under the arithmetic laws for one, products and exponentials:
//   T & A = A,  A -> T = T,  T -> A = A,
//   C -> (A & B) = (C -> A) & (C -> B),  (A & B) -> C = A -> (B -> C),
//   A -> (B -> C) = B -> (A -> C),  with & associative and commutative.
// Each factor is a letter preceded by a sorted list of premises. Accepts
// letters, &, -> and T; throws FragmentError otherwise.
IsoNormalForm hsi_normal_form(const Formula& a);

// Swaps | with & and F with T. Accepts letters, | and F only.
Formula dualize(const Formula& a);

// Isomorphism of formulas in {&, T}, {&, ->, T}, or (by duality) {|, F}.
// Throws FragmentError when the pair mixes or leaves these fragments.
bool iso_check(const Formula& a, const Formula& b);

struct IsoWitness {
  ArrowTerm forward;   // a -> b
  ArrowTerm backward;  // b -> a
};

struct IsoSearchOptions {
  // Objects are conjunctions of at most this many subformulas of a, b or T.
  std::size_t max_factors = 3;
  std::size_t max_terms_per_hom_set = 20'000;
  std::size_t max_pair_checks = 10'000'000;
};

// Brute force over normalization classes of size <= size_bound: the first
// pair, ordered by the larger of the two sizes and then by enumeration
// index, whose composites are beta-eta equal to the identities. CART if a and b avoid ->, CCC
// otherwise; throws FragmentError outside {&, ->, T}.
std::optional<IsoWitness> find_iso_witness(const Formula& a, const Formula& b, std::size_t size_bound,
                                           const IsoSearchOptions& options = {});

// Value with & as product, -> as reversed exponentiation, | as sum, T as 1
// and F as 0. Letters missing from the assignment throw PreconditionError.
// Returns nothing once an intermediate value would exceed max_bits.
std::optional<Natural> arithmetic_value(const Formula& a, const std::map<std::string, unsigned>& assignment,
                                        std::size_t max_bits = 1u << 16);

}  // namespace proofid
