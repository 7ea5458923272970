#pragma once

#include <nlohmann/json.hpp>

#include "proofid/arrow.hpp"
#include "proofid/formula.hpp"
#include "proofid/lambda.hpp"

namespace proofid::detail {

using Json = nlohmann::ordered_json;

Json encode(const Formula& f);
Json encode(const ArrowTerm& t);
Json encode(const LambdaTerm& t);

Formula decode_formula(const Json& j);
ArrowTerm decode_arrow(const Json& j);
LambdaTerm decode_lambda(const Json& j);

}  // namespace proofid::detail
