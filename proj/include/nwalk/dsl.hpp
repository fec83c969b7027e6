#pragma once

// Text form of weighted N-step sets:
//
//   stepset ::= keyword | step (";" step)*
//   keyword ::= "dyck" | "motzkin" | "default"
//   step    ::= "{" int ("," int)* "}" [":" rational]
//
// Whitespace is ignored. A missing weight is 1. "default" is the Dyck set.

#include <string>
#include <string_view>

#include "nwalk/core.hpp"

namespace nwalk {

/// Throws ValidationError on malformed input, duplicate N-steps or negative weights.
WeightedStepSet parse_step_set(std::string_view text);

/// Inverse of parse_step_set; weights of 1 are omitted.
std::string format_step_set(const WeightedStepSet& set);

/// Comma-separated integers, e.g. "10,100,1000".
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace nwalk
