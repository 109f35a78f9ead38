#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lenserve/container.hpp"
#include "lenserve/schema.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

// Parser over decoded path segments. run returns every way the parser can
// succeed starting at cursor, most preferred first; an empty result is a
// failure. Keeping all results lets an ordered alternative backtrack when a
// later part of the path rejects its first choice.
struct UriParser {
  using Segments = std::span<const std::string>;
  using Result = std::vector<std::pair<Value, std::size_t>>;

  Schema schema;
  std::function<Result(Segments, std::size_t)> run;
};

UriParser unit_parser();
UriParser literal_parser(const std::string& seg);
// Single capture segment: Int = optional '-' then digits, Nat = digits,
// Bool = true|false, Text = any non-empty segment.
UriParser capture_parser(const Schema& cap);

// Runs a, then b from where a stopped; yields Pair.
UriParser seq_parser(const UriParser& a, const UriParser& b);
// Left results first (tagged Inl), then right results (tagged Inr).
UriParser alt_parser(const UriParser& a, const UriParser& b);

bool is_uri_parsable(const Schema& s);
// Parser for a URI schema; throws ConfigurationError for List or Map parts.
UriParser uri_parser(const Schema& s);

// Splits a path on '/', dropping the leading slash and one trailing slash,
// and percent-decodes each segment. nullopt if the path does not start with
// '/' or has a malformed escape.
std::optional<std::vector<std::string>> split_path(std::string_view path);

// First parse of the path that consumes every segment.
std::optional<Value> parse_uri(const UriParser& parser, std::string_view path);
std::optional<Value> parse_uri(const Schema& s, std::string_view path);

// Inverse direction: the path that denotes v (v must conform to s). Sums are
// rendered without tags, so ambiguous grammars may parse back differently.
std::string render_uri(const Schema& s, const Value& v);

// Every route of a URI schema, sums expanded, captures annotated as
// Type:n1, Type:n2, ... in order of appearance.
std::vector<std::string> list_routes(const Schema& s);

// Drops the choice tags that Sum containers put on v: the client already
// picked the branch through the URI, so responses carry only the chosen
// branch's value. Tensor and Product containers are walked componentwise.
Value strip_choices(const Container& c, const Value& v);

// JSON text of a response value as seen through container c.
std::string encode_response(const Container& c, const Value& v);

// Body codec for the resource side: JSON, see json_codec.hpp.
std::string serialize(const Schema& s, const Value& v);
Value deserialize_body(const Schema& s, std::string_view text);

}  // namespace lenserve
