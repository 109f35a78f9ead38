#include "lenserve/schema.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "lenserve/errors.hpp"

namespace lenserve {

struct Schema::Node {
  SchemaKind kind;
  std::string literal;
  std::vector<Schema> children;
};

Schema::Schema(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

bool is_scalar_schema(const Schema& s) {
  switch (s.kind()) {
    case SchemaKind::Bool:
    case SchemaKind::Int:
    case SchemaKind::Nat:
    case SchemaKind::Text: return true;
    default: return false;
  }
}

}  // namespace

Schema Schema::unit() {
  static const Schema s(std::make_shared<const Node>(Node{SchemaKind::Unit, {}, {}}));
  return s;
}
Schema Schema::boolean() {
  static const Schema s(std::make_shared<const Node>(Node{SchemaKind::Bool, {}, {}}));
  return s;
}
Schema Schema::integer() {
  static const Schema s(std::make_shared<const Node>(Node{SchemaKind::Int, {}, {}}));
  return s;
}
Schema Schema::nat() {
  static const Schema s(std::make_shared<const Node>(Node{SchemaKind::Nat, {}, {}}));
  return s;
}
Schema Schema::text() {
  static const Schema s(std::make_shared<const Node>(Node{SchemaKind::Text, {}, {}}));
  return s;
}

Schema Schema::lit(std::string s) {
  if (s.empty()) throw std::invalid_argument("literal path segment must be non-empty");
  if (s.find('/') != std::string::npos) throw std::invalid_argument("literal path segment must not contain '/': " + s);
  return Schema(std::make_shared<const Node>(Node{SchemaKind::Lit, std::move(s), {}}));
}

Schema Schema::prod(Schema left, Schema right) {
  return Schema(std::make_shared<const Node>(Node{SchemaKind::Prod, {}, {std::move(left), std::move(right)}}));
}

Schema Schema::sum(Schema left, Schema right) {
  return Schema(std::make_shared<const Node>(Node{SchemaKind::Sum, {}, {std::move(left), std::move(right)}}));
}

Schema Schema::list(Schema elem) {
  return Schema(std::make_shared<const Node>(Node{SchemaKind::List, {}, {std::move(elem)}}));
}

Schema Schema::map(Schema key, Schema val) {
  if (!is_scalar_schema(key)) throw std::invalid_argument("map key schema must be Bool, Int, Nat or Text");
  return Schema(std::make_shared<const Node>(Node{SchemaKind::Map, {}, {std::move(key), std::move(val)}}));
}

SchemaKind Schema::kind() const noexcept { return node_->kind; }

const std::string& Schema::literal() const {
  if (kind() != SchemaKind::Lit) throw ContractViolation("not a literal schema: " + to_string());
  return node_->literal;
}

const Schema& Schema::left() const {
  if (node_->children.size() != 2) throw ContractViolation("schema has no left operand: " + to_string());
  return node_->children[0];
}

const Schema& Schema::right() const {
  if (node_->children.size() != 2) throw ContractViolation("schema has no right operand: " + to_string());
  return node_->children[1];
}

const Schema& Schema::elem() const {
  if (kind() != SchemaKind::List) throw ContractViolation("not a list schema: " + to_string());
  return node_->children[0];
}

std::string Schema::to_string() const {
  switch (kind()) {
    case SchemaKind::Unit: return "()";
    case SchemaKind::Bool: return "Bool";
    case SchemaKind::Int: return "Int";
    case SchemaKind::Nat: return "Nat";
    case SchemaKind::Text: return "String";
    case SchemaKind::Lit: return "\"" + node_->literal + "\"";
    case SchemaKind::Prod: {
      // right-nested products print flat
      std::string l = left().is(SchemaKind::Prod) || left().is(SchemaKind::Sum) ? "(" + left().to_string() + ")"
                                                                                 : left().to_string();
      std::string r = right().is(SchemaKind::Sum) ? "(" + right().to_string() + ")" : right().to_string();
      return l + " * " + r;
    }
    case SchemaKind::Sum: {
      std::string l = left().is(SchemaKind::Sum) ? "(" + left().to_string() + ")" : left().to_string();
      return l + " + " + right().to_string();
    }
    case SchemaKind::List: return "List (" + elem().to_string() + ")";
    case SchemaKind::Map: return "Dict (" + left().to_string() + ") (" + right().to_string() + ")";
  }
  return "?";
}

bool operator==(const Schema& a, const Schema& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->literal == b.node_->literal &&
         a.node_->children == b.node_->children;
}

std::ostream& operator<<(std::ostream& os, const Schema& s) { return os << s.to_string(); }

bool conforms(const Schema& s, const Value& v) {
  switch (s.kind()) {
    case SchemaKind::Unit: return v.is(ValueKind::Unit);
    case SchemaKind::Bool: return v.is(ValueKind::Bool);
    case SchemaKind::Int: return v.is(ValueKind::Int);
    case SchemaKind::Nat: return v.is(ValueKind::Nat);
    case SchemaKind::Text: return v.is(ValueKind::Text);
    case SchemaKind::Lit: return v.is(ValueKind::Text) && v.as_text() == s.literal();
    case SchemaKind::Prod: return v.is(ValueKind::Pair) && conforms(s.left(), v.first()) && conforms(s.right(), v.second());
    case SchemaKind::Sum:
      if (v.is(ValueKind::Inl)) return conforms(s.left(), v.payload());
      if (v.is(ValueKind::Inr)) return conforms(s.right(), v.payload());
      return false;
    case SchemaKind::List:
      if (!v.is(ValueKind::List)) return false;
      for (const auto& item : v.items()) {
        if (!conforms(s.elem(), item)) return false;
      }
      return true;
    case SchemaKind::Map:
      if (!v.is(ValueKind::Map)) return false;
      for (const auto& [k, val] : v.entries()) {
        if (!conforms(s.left(), k) || !conforms(s.right(), val)) return false;
      }
      return true;
  }
  return false;
}

Schema prod_of(std::initializer_list<Schema> parts) {
  if (parts.size() == 0) return Schema::unit();
  std::vector<Schema> v(parts);
  Schema acc = v.back();
  for (auto it = v.rbegin() + 1; it != v.rend(); ++it) acc = Schema::prod(*it, acc);
  return acc;
}

}  // namespace lenserve
