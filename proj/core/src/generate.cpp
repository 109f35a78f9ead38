#include "lenserve/generate.hpp"

#include <string>

namespace lenserve {

namespace {

std::string random_text(Rng& rng, const GenOptions& opts) {
  // Mix of ASCII, URI-reserved characters and a couple of multi-byte code points.
  static const std::vector<std::string> alphabet = {"a", "b", "c", "x", "Z", "0", "7", " ", "/", "%",
                                                    "?", "\"", "\\", "-", "\xc3\xa9", "\xe2\x82\xac"};
  std::size_t lo = opts.non_empty_text ? 1 : 0;
  std::size_t len = std::uniform_int_distribution<std::size_t>(lo, std::max(lo, opts.max_text))(rng);
  std::string out;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (std::size_t i = 0; i < len; ++i) out += alphabet[pick(rng)];
  return out;
}

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

std::string random_word(Rng& rng) {
  static const std::vector<std::string> words = {"user", "todo", "add", "sub", "all", "name", "iot",
                                                 "lights", "boiler", "x", "item", "v1"};
  return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
}

}  // namespace

Value generate_value(const Schema& s, Rng& rng, const GenOptions& opts) {
  switch (s.kind()) {
    case SchemaKind::Unit: return Value::unit();
    case SchemaKind::Bool: return Value::boolean(coin(rng));
    case SchemaKind::Int:
      return Value::integer(std::uniform_int_distribution<std::int64_t>(-opts.int_bound, opts.int_bound)(rng));
    case SchemaKind::Nat: return Value::nat(std::uniform_int_distribution<std::uint64_t>(0, opts.nat_bound)(rng));
    case SchemaKind::Text: return Value::text(random_text(rng, opts));
    case SchemaKind::Lit: return Value::text(s.literal());
    case SchemaKind::Prod: {
      Value a = generate_value(s.left(), rng, opts);
      return Value::pair(std::move(a), generate_value(s.right(), rng, opts));
    }
    case SchemaKind::Sum:
      return coin(rng) ? Value::inl(generate_value(s.left(), rng, opts))
                       : Value::inr(generate_value(s.right(), rng, opts));
    case SchemaKind::List: {
      std::size_t n = std::uniform_int_distribution<std::size_t>(0, opts.max_items)(rng);
      std::vector<Value> items;
      for (std::size_t i = 0; i < n; ++i) items.push_back(generate_value(s.elem(), rng, opts));
      return Value::list(std::move(items));
    }
    case SchemaKind::Map: {
      std::size_t n = std::uniform_int_distribution<std::size_t>(0, opts.max_items)(rng);
      std::vector<Value::MapEntry> entries;
      // Bool keys have two inhabitants, so bound the attempts rather than the size.
      for (std::size_t attempt = 0; attempt < 4 * n && entries.size() < n; ++attempt) {
        Value k = generate_value(s.left(), rng, opts);
        bool dup = false;
        for (const auto& e : entries) dup = dup || e.first == k;
        if (!dup) entries.emplace_back(std::move(k), generate_value(s.right(), rng, opts));
      }
      return Value::map(std::move(entries));
    }
  }
  return Value::unit();
}

Schema generate_schema(Rng& rng, const SchemaGenOptions& opts) {
  auto leaf = [&]() -> Schema {
    int hi = opts.allow_literals ? 5 : 4;
    switch (std::uniform_int_distribution<int>(0, hi)(rng)) {
      case 0: return Schema::unit();
      case 1: return Schema::boolean();
      case 2: return Schema::integer();
      case 3: return Schema::nat();
      case 4: return Schema::text();
      default: return Schema::lit(random_word(rng));
    }
  };
  if (opts.max_depth <= 0) return leaf();
  SchemaGenOptions sub = opts;
  sub.max_depth = opts.max_depth - 1;
  int hi = opts.allow_collections ? 5 : 3;
  switch (std::uniform_int_distribution<int>(0, hi)(rng)) {
    case 0: return leaf();
    case 1: {
      Schema l = generate_schema(rng, sub);
      return Schema::prod(std::move(l), generate_schema(rng, sub));
    }
    case 2:
    case 3: {
      Schema l = generate_schema(rng, sub);
      return Schema::sum(std::move(l), generate_schema(rng, sub));
    }
    case 4: return Schema::list(generate_schema(rng, sub));
    default: {
      static const Schema keys[] = {Schema::boolean(), Schema::integer(), Schema::nat(), Schema::text()};
      Schema k = keys[std::uniform_int_distribution<int>(0, 3)(rng)];
      return Schema::map(k, generate_schema(rng, sub));
    }
  }
}

Schema generate_uri_schema(Rng& rng, int max_depth, bool prefixed_sums) {
  auto leaf = [&]() -> Schema {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
      case 0: return Schema::unit();
      case 1: return Schema::boolean();
      case 2: return Schema::integer();
      case 3: return Schema::nat();
      case 4: return Schema::text();
      default: return Schema::lit(random_word(rng));
    }
  };
  if (max_depth <= 0) return leaf();
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return leaf();
    case 1: {
      Schema l = generate_uri_schema(rng, max_depth - 1, prefixed_sums);
      return Schema::prod(std::move(l), generate_uri_schema(rng, max_depth - 1, prefixed_sums));
    }
    default: {
      Schema l = generate_uri_schema(rng, max_depth - 1, prefixed_sums);
      Schema r = generate_uri_schema(rng, max_depth - 1, prefixed_sums);
      if (prefixed_sums) {
        std::string a = random_word(rng);
        std::string b = random_word(rng);
        if (a == b) b = a + "2";
        l = Schema::prod(Schema::lit(a), std::move(l));
        r = Schema::prod(Schema::lit(b), std::move(r));
      }
      return Schema::sum(std::move(l), std::move(r));
    }
  }
}

std::optional<std::vector<Value>> enumerate_values(const Schema& s, std::size_t limit) {
  switch (s.kind()) {
    case SchemaKind::Unit: return std::vector<Value>{Value::unit()};
    case SchemaKind::Bool: return std::vector<Value>{Value::boolean(false), Value::boolean(true)};
    case SchemaKind::Lit: return std::vector<Value>{Value::text(s.literal())};
    case SchemaKind::Prod: {
      auto l = enumerate_values(s.left(), limit);
      auto r = enumerate_values(s.right(), limit);
      if (!l || !r || l->size() * r->size() > limit) return std::nullopt;
      std::vector<Value> out;
      for (const auto& a : *l)
        for (const auto& b : *r) out.push_back(Value::pair(a, b));
      return out;
    }
    case SchemaKind::Sum: {
      auto l = enumerate_values(s.left(), limit);
      auto r = enumerate_values(s.right(), limit);
      if (!l || !r || l->size() + r->size() > limit) return std::nullopt;
      std::vector<Value> out;
      for (const auto& a : *l) out.push_back(Value::inl(a));
      for (const auto& b : *r) out.push_back(Value::inr(b));
      return out;
    }
    default: return std::nullopt;
  }
}

}  // namespace lenserve
