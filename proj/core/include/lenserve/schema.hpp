#pragma once

#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "lenserve/value.hpp"

namespace lenserve {

enum class SchemaKind { Unit, Bool, Int, Nat, Text, Lit, Prod, Sum, List, Map };

// Grammar over Value. The same descriptor drives conformance checks, the JSON
// body codec and the URI grammar of a server's left boundary.
class Schema {
 public:
  static Schema unit();
  static Schema boolean();
  static Schema integer();
  static Schema nat();
  static Schema text();
  // Singleton string type: inhabited only by Text(s). s must be non-empty and
  // must not contain '/'; throws std::invalid_argument otherwise.
  static Schema lit(std::string s);
  static Schema prod(Schema left, Schema right);
  static Schema sum(Schema left, Schema right);
  static Schema list(Schema elem);
  // key must be Bool, Int, Nat or Text.
  static Schema map(Schema key, Schema val);

  SchemaKind kind() const noexcept;
  bool is(SchemaKind k) const noexcept { return kind() == k; }

  const std::string& literal() const;
  // Left/right operands of Prod and Sum, key/value of Map.
  const Schema& left() const;
  const Schema& right() const;
  const Schema& elem() const;

  // Compact human-readable form, e.g. `"add" * Int * Int`.
  std::string to_string() const;

  friend bool operator==(const Schema& a, const Schema& b);
  friend bool operator!=(const Schema& a, const Schema& b) { return !(a == b); }

 private:
  struct Node;
  explicit Schema(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Schema& s);

// True iff v inhabits s.
bool conforms(const Schema& s, const Value& v);

// Right-nested product of several schemas: prod_of({a, b, c}) = a * (b * c).
Schema prod_of(std::initializer_list<Schema> parts);

}  // namespace lenserve
