#include "lenserve/json_codec.hpp"

#include <limits>

#include "json.hpp"
#include "lenserve/errors.hpp"

namespace lenserve {

using nlohmann::json;

namespace {

json write_value(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Unit: return nullptr;
    case ValueKind::Bool: return v.as_bool();
    case ValueKind::Int: return v.as_int();
    case ValueKind::Nat: return v.as_nat();
    case ValueKind::Text: return v.as_text();
    case ValueKind::Pair: return json::array({write_value(v.first()), write_value(v.second())});
    case ValueKind::Inl: return json::object({{"L", write_value(v.payload())}});
    case ValueKind::Inr: return json::object({{"R", write_value(v.payload())}});
    case ValueKind::List: {
      json arr = json::array();
      for (const auto& item : v.items()) arr.push_back(write_value(item));
      return arr;
    }
    case ValueKind::Map: {
      json arr = json::array();
      for (const auto& [k, val] : v.entries()) arr.push_back(json::array({write_value(k), write_value(val)}));
      return arr;
    }
  }
  return nullptr;
}

[[noreturn]] void reject(const Schema& s, const json& j) {
  throw DecodeError("expected " + s.to_string() + ", got " + j.dump());
}

Value read_value(const Schema& s, const json& j) {
  switch (s.kind()) {
    case SchemaKind::Unit:
      if (!j.is_null()) reject(s, j);
      return Value::unit();
    case SchemaKind::Bool:
      if (!j.is_boolean()) reject(s, j);
      return Value::boolean(j.get<bool>());
    case SchemaKind::Int:
      if (j.is_number_integer() && !j.is_number_unsigned()) return Value::integer(j.get<std::int64_t>());
      if (j.is_number_unsigned() && j.get<std::uint64_t>() <= std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
        return Value::integer(static_cast<std::int64_t>(j.get<std::uint64_t>()));
      }
      reject(s, j);
    case SchemaKind::Nat:
      if (j.is_number_unsigned()) return Value::nat(j.get<std::uint64_t>());
      if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Value::nat(std::uint64_t(j.get<std::int64_t>()));
      reject(s, j);
    case SchemaKind::Text:
      if (!j.is_string()) reject(s, j);
      return Value::text(j.get<std::string>());
    case SchemaKind::Lit:
      if (!j.is_string() || j.get<std::string>() != s.literal()) reject(s, j);
      return Value::text(s.literal());
    case SchemaKind::Prod:
      if (!j.is_array() || j.size() != 2) reject(s, j);
      return Value::pair(read_value(s.left(), j[0]), read_value(s.right(), j[1]));
    case SchemaKind::Sum:
      if (!j.is_object() || j.size() != 1) reject(s, j);
      if (j.contains("L")) return Value::inl(read_value(s.left(), j["L"]));
      if (j.contains("R")) return Value::inr(read_value(s.right(), j["R"]));
      reject(s, j);
    case SchemaKind::List: {
      if (!j.is_array()) reject(s, j);
      std::vector<Value> items;
      items.reserve(j.size());
      for (const auto& e : j) items.push_back(read_value(s.elem(), e));
      return Value::list(std::move(items));
    }
    case SchemaKind::Map: {
      if (!j.is_array()) reject(s, j);
      std::vector<Value::MapEntry> entries;
      entries.reserve(j.size());
      for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) reject(s, j);
        entries.emplace_back(read_value(s.left(), e[0]), read_value(s.right(), e[1]));
      }
      try {
        return Value::map(std::move(entries));
      } catch (const std::invalid_argument& ex) {
        throw DecodeError(ex.what());
      }
    }
  }
  reject(s, j);
}

}  // namespace

std::string encode_json(const Value& v) { return write_value(v).dump(); }

Value decode_json(const Schema& s, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw DecodeError(std::string("malformed JSON: ") + ex.what());
  }
  return read_value(s, j);
}

}  // namespace lenserve
