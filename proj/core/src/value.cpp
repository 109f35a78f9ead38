#include "lenserve/value.hpp"

#include <ostream>
#include <stdexcept>
#include <variant>

#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"

namespace lenserve {

struct Value::Node {
  ValueKind kind;
  std::variant<std::monostate, bool, std::int64_t, std::uint64_t, std::string, std::pair<Value, Value>, Value,
               std::vector<Value>, std::vector<MapEntry>>
      data;
};

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Unit: return "Unit";
    case ValueKind::Bool: return "Bool";
    case ValueKind::Int: return "Int";
    case ValueKind::Nat: return "Nat";
    case ValueKind::Text: return "Text";
    case ValueKind::Pair: return "Pair";
    case ValueKind::Inl: return "Inl";
    case ValueKind::Inr: return "Inr";
    case ValueKind::List: return "List";
    case ValueKind::Map: return "Map";
  }
  return "?";
}

namespace {

[[noreturn]] void mismatch(ValueKind want, ValueKind got) {
  throw ContractViolation("expected " + std::string(to_string(want)) + " value, got " + std::string(to_string(got)));
}

}  // namespace

Value::Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Value::Value() : Value(unit()) {}

Value Value::unit() {
  static const auto node = std::make_shared<const Node>(Node{ValueKind::Unit, std::monostate{}});
  return Value(node);
}

Value Value::boolean(bool b) { return Value(std::make_shared<const Node>(Node{ValueKind::Bool, b})); }

Value Value::integer(std::int64_t i) { return Value(std::make_shared<const Node>(Node{ValueKind::Int, i})); }

Value Value::nat(std::uint64_t n) { return Value(std::make_shared<const Node>(Node{ValueKind::Nat, n})); }

Value Value::text(std::string s) { return Value(std::make_shared<const Node>(Node{ValueKind::Text, std::move(s)})); }

Value Value::pair(Value first, Value second) {
  return Value(std::make_shared<const Node>(Node{ValueKind::Pair, std::pair<Value, Value>(std::move(first), std::move(second))}));
}

Value Value::inl(Value v) { return Value(std::make_shared<const Node>(Node{ValueKind::Inl, std::move(v)})); }

Value Value::inr(Value v) { return Value(std::make_shared<const Node>(Node{ValueKind::Inr, std::move(v)})); }

Value Value::list(std::vector<Value> items) {
  return Value(std::make_shared<const Node>(Node{ValueKind::List, std::move(items)}));
}

Value Value::map(std::vector<MapEntry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].first.is_scalar()) {
      throw std::invalid_argument("map key must be a scalar, got " + std::string(to_string(entries[i].first.kind())));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[j].first == entries[i].first) {
        throw std::invalid_argument("duplicate map key");
      }
    }
  }
  return Value(std::make_shared<const Node>(Node{ValueKind::Map, std::move(entries)}));
}

ValueKind Value::kind() const noexcept { return node_->kind; }

bool Value::is_scalar() const noexcept {
  switch (kind()) {
    case ValueKind::Bool:
    case ValueKind::Int:
    case ValueKind::Nat:
    case ValueKind::Text: return true;
    default: return false;
  }
}

bool Value::as_bool() const {
  if (kind() != ValueKind::Bool) mismatch(ValueKind::Bool, kind());
  return std::get<bool>(node_->data);
}

std::int64_t Value::as_int() const {
  if (kind() != ValueKind::Int) mismatch(ValueKind::Int, kind());
  return std::get<std::int64_t>(node_->data);
}

std::uint64_t Value::as_nat() const {
  if (kind() != ValueKind::Nat) mismatch(ValueKind::Nat, kind());
  return std::get<std::uint64_t>(node_->data);
}

const std::string& Value::as_text() const {
  if (kind() != ValueKind::Text) mismatch(ValueKind::Text, kind());
  return std::get<std::string>(node_->data);
}

const Value& Value::first() const {
  if (kind() != ValueKind::Pair) mismatch(ValueKind::Pair, kind());
  return std::get<std::pair<Value, Value>>(node_->data).first;
}

const Value& Value::second() const {
  if (kind() != ValueKind::Pair) mismatch(ValueKind::Pair, kind());
  return std::get<std::pair<Value, Value>>(node_->data).second;
}

const Value& Value::payload() const {
  if (kind() != ValueKind::Inl && kind() != ValueKind::Inr) {
    throw ContractViolation("expected Inl or Inr value, got " + std::string(to_string(kind())));
  }
  return std::get<Value>(node_->data);
}

const std::vector<Value>& Value::items() const {
  if (kind() != ValueKind::List) mismatch(ValueKind::List, kind());
  return std::get<std::vector<Value>>(node_->data);
}

const std::vector<Value::MapEntry>& Value::entries() const {
  if (kind() != ValueKind::Map) mismatch(ValueKind::Map, kind());
  return std::get<std::vector<MapEntry>>(node_->data);
}

std::optional<Value> Value::lookup(const Value& key) const {
  for (const auto& [k, v] : entries()) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Value Value::with_entry(const Value& key, Value val) const {
  std::vector<MapEntry> out = entries();
  for (auto& entry : out) {
    if (entry.first == key) {
      entry.second = std::move(val);
      return map(std::move(out));
    }
  }
  out.emplace_back(key, std::move(val));
  return map(std::move(out));
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  return a.node_->data == b.node_->data;
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << encode_json(v); }

}  // namespace lenserve
