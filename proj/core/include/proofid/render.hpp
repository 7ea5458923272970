#pragma once

#include <string>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid {

// Text renderings; each parses back to a structurally equal value.
std::string render(const Formula& f);
std::string render(const ArrowTerm& t);
std::string render(const LambdaTerm& t);
std::string render(const ArrowType& t);

}  // namespace proofid
