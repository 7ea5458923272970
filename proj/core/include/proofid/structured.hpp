#pragma once

#include <string>
#include <string_view>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

// JSON tree encoding; field order is fixed (see docs/structured-format.md).
std::string to_structured(const Formula& f);
std::string to_structured(const ArrowTerm& t);
std::string to_structured(const LambdaTerm& t);

// Inverses; throw Error on malformed input.
Formula formula_from_structured(std::string_view json);
ArrowTerm arrow_from_structured(std::string_view json);
LambdaTerm lambda_from_structured(std::string_view json);

}  // namespace proofid
