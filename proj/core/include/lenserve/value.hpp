#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lenserve {

enum class ValueKind { Unit, Bool, Int, Nat, Text, Pair, Inl, Inr, List, Map };

std::string_view to_string(ValueKind kind);

// Immutable dynamic value. Every lens input and output in the library lives in
// this universe; copies share structure so passing values around is cheap.
//
// Equality is structural. Map is an association list that keeps insertion
// order, and its keys must be distinct scalars (Bool, Int, Nat or Text).
class Value {
 public:
  using MapEntry = std::pair<Value, Value>;

  // Default-constructed value is Unit.
  Value();

  static Value unit();
  static Value boolean(bool b);
  static Value integer(std::int64_t i);
  static Value nat(std::uint64_t n);
  static Value text(std::string s);
  static Value pair(Value first, Value second);
  static Value inl(Value v);
  static Value inr(Value v);
  static Value list(std::vector<Value> items);
  // Throws std::invalid_argument on duplicate or non-scalar keys.
  static Value map(std::vector<MapEntry> entries);

  ValueKind kind() const noexcept;
  bool is(ValueKind k) const noexcept { return kind() == k; }
  bool is_scalar() const noexcept;

  // Checked accessors; a kind mismatch is a ContractViolation.
  bool as_bool() const;
  std::int64_t as_int() const;
  std::uint64_t as_nat() const;
  const std::string& as_text() const;
  const Value& first() const;
  const Value& second() const;
  // Payload of an Inl or Inr.
  const Value& payload() const;
  const std::vector<Value>& items() const;
  const std::vector<MapEntry>& entries() const;

  std::optional<Value> lookup(const Value& key) const;
  // Replaces the entry for key in place, or appends a new one.
  Value with_entry(const Value& key, Value val) const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Canonical JSON rendering; used for diagnostics and test output.
std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace lenserve
