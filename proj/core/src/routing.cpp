#include "lenserve/routing.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"

namespace lenserve {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<Value> lex_capture(const Schema& cap, const std::string& seg) {
  switch (cap.kind()) {
    case SchemaKind::Int: {
      std::string_view digits = seg;
      if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
      if (!all_digits(digits)) return std::nullopt;
      std::int64_t out = 0;
      auto [ptr, ec] = std::from_chars(seg.data(), seg.data() + seg.size(), out);
      if (ec != std::errc() || ptr != seg.data() + seg.size()) return std::nullopt;
      return Value::integer(out);
    }
    case SchemaKind::Nat: {
      if (!all_digits(seg)) return std::nullopt;
      std::uint64_t out = 0;
      auto [ptr, ec] = std::from_chars(seg.data(), seg.data() + seg.size(), out);
      if (ec != std::errc() || ptr != seg.data() + seg.size()) return std::nullopt;
      return Value::nat(out);
    }
    case SchemaKind::Bool:
      if (seg == "true") return Value::boolean(true);
      if (seg == "false") return Value::boolean(false);
      return std::nullopt;
    case SchemaKind::Text:
      if (seg.empty()) return std::nullopt;
      return Value::text(seg);
    default: return std::nullopt;
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<std::string> percent_decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (i + 2 >= s.size()) return std::nullopt;
    int hi = hex_digit(s[i + 1]);
    int lo = hex_digit(s[i + 2]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

std::string percent_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

void render_segments(const Schema& s, const Value& v, std::vector<std::string>& out) {
  switch (s.kind()) {
    case SchemaKind::Unit: return;
    case SchemaKind::Bool: out.push_back(v.as_bool() ? "true" : "false"); return;
    case SchemaKind::Int: out.push_back(std::to_string(v.as_int())); return;
    case SchemaKind::Nat: out.push_back(std::to_string(v.as_nat())); return;
    case SchemaKind::Text:
    case SchemaKind::Lit: out.push_back(percent_encode(v.as_text())); return;
    case SchemaKind::Prod:
      render_segments(s.left(), v.first(), out);
      render_segments(s.right(), v.second(), out);
      return;
    case SchemaKind::Sum:
      render_segments(v.is(ValueKind::Inl) ? s.left() : s.right(), v.payload(), out);
      return;
    case SchemaKind::List:
    case SchemaKind::Map: throw ConfigurationError("no URI form for " + s.to_string());
  }
}

std::vector<std::vector<std::string>> route_segments(const Schema& s) {
  switch (s.kind()) {
    case SchemaKind::Unit: return {{}};
    case SchemaKind::Lit: return {{s.literal()}};
    case SchemaKind::Bool:
    case SchemaKind::Int:
    case SchemaKind::Nat:
    case SchemaKind::Text: return {{"\x01" + s.to_string()}};  // capture marker, numbered later
    case SchemaKind::Prod: {
      std::vector<std::vector<std::string>> out;
      for (const auto& l : route_segments(s.left())) {
        for (const auto& r : route_segments(s.right())) {
          auto joined = l;
          joined.insert(joined.end(), r.begin(), r.end());
          out.push_back(std::move(joined));
        }
      }
      return out;
    }
    case SchemaKind::Sum: {
      auto out = route_segments(s.left());
      auto r = route_segments(s.right());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    default: throw ConfigurationError("no URI form for " + s.to_string());
  }
}

}  // namespace

UriParser unit_parser() {
  return {Schema::unit(), [](UriParser::Segments, std::size_t at) {
            return UriParser::Result{{Value::unit(), at}};
          }};
}

UriParser literal_parser(const std::string& seg) {
  Schema s = Schema::lit(seg);
  return {s, [seg](UriParser::Segments segs, std::size_t at) {
            if (at < segs.size() && segs[at] == seg) return UriParser::Result{{Value::text(seg), at + 1}};
            return UriParser::Result{};
          }};
}

UriParser capture_parser(const Schema& cap) {
  switch (cap.kind()) {
    case SchemaKind::Int:
    case SchemaKind::Nat:
    case SchemaKind::Bool:
    case SchemaKind::Text: break;
    default: throw ConfigurationError("not a capture type: " + cap.to_string());
  }
  return {cap, [cap](UriParser::Segments segs, std::size_t at) {
            if (at >= segs.size()) return UriParser::Result{};
            auto v = lex_capture(cap, segs[at]);
            if (!v) return UriParser::Result{};
            return UriParser::Result{{std::move(*v), at + 1}};
          }};
}

UriParser seq_parser(const UriParser& a, const UriParser& b) {
  return {Schema::prod(a.schema, b.schema), [ra = a.run, rb = b.run](UriParser::Segments segs, std::size_t at) {
            UriParser::Result out;
            for (auto& [va, mid] : ra(segs, at)) {
              for (auto& [vb, end] : rb(segs, mid)) out.emplace_back(Value::pair(va, std::move(vb)), end);
            }
            return out;
          }};
}

UriParser alt_parser(const UriParser& a, const UriParser& b) {
  return {Schema::sum(a.schema, b.schema), [ra = a.run, rb = b.run](UriParser::Segments segs, std::size_t at) {
            UriParser::Result out;
            for (auto& [v, end] : ra(segs, at)) out.emplace_back(Value::inl(std::move(v)), end);
            for (auto& [v, end] : rb(segs, at)) out.emplace_back(Value::inr(std::move(v)), end);
            return out;
          }};
}

bool is_uri_parsable(const Schema& s) {
  switch (s.kind()) {
    case SchemaKind::List:
    case SchemaKind::Map: return false;
    case SchemaKind::Prod:
    case SchemaKind::Sum: return is_uri_parsable(s.left()) && is_uri_parsable(s.right());
    default: return true;
  }
}

UriParser uri_parser(const Schema& s) {
  switch (s.kind()) {
    case SchemaKind::Unit: return unit_parser();
    case SchemaKind::Lit: return literal_parser(s.literal());
    case SchemaKind::Bool:
    case SchemaKind::Int:
    case SchemaKind::Nat:
    case SchemaKind::Text: return capture_parser(s);
    case SchemaKind::Prod: return seq_parser(uri_parser(s.left()), uri_parser(s.right()));
    case SchemaKind::Sum: return alt_parser(uri_parser(s.left()), uri_parser(s.right()));
    case SchemaKind::List:
    case SchemaKind::Map: break;
  }
  throw ConfigurationError("no URI grammar for " + s.to_string());
}

std::optional<std::vector<std::string>> split_path(std::string_view path) {
  if (path.empty() || path.front() != '/') return std::nullopt;
  path.remove_prefix(1);
  if (!path.empty() && path.back() == '/') path.remove_suffix(1);
  std::vector<std::string> out;
  if (path.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = path.find('/', start);
    auto raw = path.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    auto seg = percent_decode(raw);
    if (!seg) return std::nullopt;
    out.push_back(std::move(*seg));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return out;
}

std::optional<Value> parse_uri(const UriParser& parser, std::string_view path) {
  auto segs = split_path(path);
  if (!segs) return std::nullopt;
  for (auto& [v, end] : parser.run(*segs, 0)) {
    if (end == segs->size()) return std::move(v);
  }
  return std::nullopt;
}

std::optional<Value> parse_uri(const Schema& s, std::string_view path) { return parse_uri(uri_parser(s), path); }

std::string render_uri(const Schema& s, const Value& v) {
  std::vector<std::string> segs;
  render_segments(s, v, segs);
  std::string out;
  for (const auto& seg : segs) out += "/" + seg;
  return out.empty() ? "/" : out;
}

std::vector<std::string> list_routes(const Schema& s) {
  std::vector<std::string> out;
  for (const auto& segs : route_segments(s)) {
    std::string path;
    int capture = 0;
    for (const auto& seg : segs) {
      if (!seg.empty() && seg.front() == '\x01') {
        path += "/" + seg.substr(1) + ":n" + std::to_string(++capture);
      } else {
        path += "/" + seg;
      }
    }
    out.push_back(path.empty() ? "/" : path);
  }
  return out;
}

Value strip_choices(const Container& c, const Value& v) {
  switch (c.kind()) {
    case ContainerKind::Sum:
      return strip_choices(v.is(ValueKind::Inl) ? c.left() : c.right(), v.payload());
    case ContainerKind::Tensor:
    case ContainerKind::Product:
      return Value::pair(strip_choices(c.left(), v.first()), strip_choices(c.right(), v.second()));
    default: return v;
  }
}

std::string encode_response(const Container& c, const Value& v) {
  if (!conforms(c.shape(), v)) throw ContractViolation("response does not conform to " + c.shape().to_string());
  return encode_json(strip_choices(c, v));
}

std::string serialize(const Schema& s, const Value& v) {
  if (!conforms(s, v)) throw ContractViolation("value does not conform to " + s.to_string());
  return encode_json(v);
}

Value deserialize_body(const Schema& s, std::string_view text) { return decode_json(s, text); }

}  // namespace lenserve
