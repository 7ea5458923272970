#pragma once

#include <memory>
#include <string>
#include <unordered_map>

#include "proofid/arrow.hpp"

namespace proofid {

// Term-rewriting decision procedure for arrows of categories with binary
// products and coproducts (the CONJDISJ fragment), independent of the
// relational semantics.
//
// A term is first rewritten to a cut-free derivation (composition pushed
// through pairing, copairing, projections and injections; identities
// expanded to atomic ones). Remaining freedom comes from permuting rules,
// which is fixed by orienting every permutation equation:
//
//   <f p_i, g p_i>           ~>  pair kept outermost
//   [i_j f, i_j g]           ~>  case kept outermost
//   [<a,b>, <c,d>]           ~>  <[a,c], [b,d]>
//   i_j (f p_i)              ~>  (i_j f) p_i
//
// Two terms are equal in the free category iff their keys coincide.
class ConjDisjRewriter {
 public:
  ConjDisjRewriter();
  ~ConjDisjRewriter();
  ConjDisjRewriter(ConjDisjRewriter&&) noexcept;
  ConjDisjRewriter& operator=(ConjDisjRewriter&&) noexcept;

  // Canonical arrow term built from id on letters, pairing, copairing,
  // and composition with a single projection or injection.
  ArrowTerm normal_form(const ArrowTerm& t);
  std::string key(const ArrowTerm& t);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot helpers; both throw FragmentError outside CONJDISJ.
ArrowTerm conjdisj_normal_form(const ArrowTerm& t);
bool equal_by_rewriting(const ArrowTerm& f, const ArrowTerm& g);

}  // namespace proofid
