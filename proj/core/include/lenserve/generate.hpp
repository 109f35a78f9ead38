#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lenserve/schema.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

using Rng = std::mt19937_64;

struct GenOptions {
  std::int64_t int_bound = 1000;   // Int drawn from [-int_bound, int_bound]
  std::uint64_t nat_bound = 1000;  // Nat drawn from [0, nat_bound]
  std::size_t max_items = 4;       // List/Map length drawn from [0, max_items]
  std::size_t max_text = 8;
  bool non_empty_text = false;     // required for values that must render as URI segments
};

// Random inhabitant of s.
Value generate_value(const Schema& s, Rng& rng, const GenOptions& opts = {});

struct SchemaGenOptions {
  int max_depth = 4;
  bool allow_collections = true;  // ListS / MapS
  bool allow_literals = true;
};

Schema generate_schema(Rng& rng, const SchemaGenOptions& opts = {});

// Schemas the URI grammar accepts: captures, literals, unit, products and sums.
// With prefixed_sums every sum branch starts with a distinct literal, which
// makes the rendered path of a value unambiguous.
Schema generate_uri_schema(Rng& rng, int max_depth, bool prefixed_sums);

// All inhabitants of s when s is finite (Unit, Bool, Lit and products/sums of
// those) and the count does not exceed limit; nullopt otherwise.
std::optional<std::vector<Value>> enumerate_values(const Schema& s, std::size_t limit = 4096);

}  // namespace lenserve
