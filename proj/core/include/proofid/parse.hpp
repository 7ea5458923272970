#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

// formula := impl ; impl := disj ("->" impl)? ; disj := conj ("|" conj)* ;
// conj := atom ("&" atom)* ; atom := ident | "T" | "F" | "(" formula ")"
Formula parse_formula(std::string_view text);

// Parses and type-checks an arrow term. With a fragment, the term must lie
// in it; without one it must lie in some fragment (so F is rejected).
ArrowTerm parse_arrow(std::string_view text, std::optional<Fragment> fragment = std::nullopt);

// Parses without type checking; used to exercise infer_type directly.
ArrowTerm parse_arrow_untyped(std::string_view text);

struct LambdaParseOptions {
  // Types of free variables not annotated inline as "(x:A)".
  std::map<std::string, Formula> free_types;
  // Accept "\x. body"; each untyped binder gets a distinct placeholder
  // letter t0, t1, ... (principal_type treats binder letters as variables).
  bool allow_untyped_binders = false;
};

// \x:A. body, application by juxtaposition, (t, u), fst t, snd t, unit.
LambdaTerm parse_lambda(std::string_view text, const LambdaParseOptions& options = {});

}  // namespace proofid
