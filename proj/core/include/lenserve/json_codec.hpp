#pragma once

#include <string>
#include <string_view>

#include "lenserve/schema.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

// Canonical wire form of a value:
//   Unit -> null, Bool -> true/false, Int/Nat -> decimal, Text -> JSON string,
//   Pair(a,b) -> [a,b], Inl v -> {"L":v}, Inr v -> {"R":v}, List -> array,
//   Map -> array of [k,v] pairs in insertion order.
// Equal values always produce identical text.
std::string encode_json(const Value& v);

// Left inverse of encode_json on values conforming to s. Throws DecodeError on
// malformed text or text that does not describe an inhabitant of s.
Value decode_json(const Schema& s, std::string_view text);

}  // namespace lenserve
