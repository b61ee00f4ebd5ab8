#pragma once

// JSON forms of the coefficient types.
//
//   Laurent           [[exp, re, im], ...] in decreasing exponent order;
//                     re/im are numbers, or decimal strings beyond 2^53.
//   RationalFunction  {"num": <Laurent>, "den": <Laurent>}
//
// Readers also accept the canonical text rendering as a JSON string.

#include <json.hpp>

#include "qschur/rational_function.hpp"

namespace qschur {

using Json = nlohmann::ordered_json;

Json to_json(const Laurent& p);
Json to_json(const RationalFunction& x);
Laurent laurent_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);

}  // namespace qschur
