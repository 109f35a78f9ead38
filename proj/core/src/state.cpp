#include "lenserve/state.hpp"

#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"

namespace lenserve {

ActionFamily act_const(const Schema& s) {
  return {Container::constant(s), [](const Value&, const Value& diff) { return diff; }};
}

ActionFamily act_unit_positions(const Schema& s) {
  return {Container::unit_positions(s), [](const Value& state, const Value&) { return state; }};
}

ActionFamily act_tensor(const ActionFamily& a, const ActionFamily& b) {
  return {tensor(a.container, b.container), [fa = a.act, fb = b.act](const Value& s, const Value& p) {
            return Value::pair(fa(s.first(), p.first()), fb(s.second(), p.second()));
          }};
}

ActionFamily act_sum(const ActionFamily& a, const ActionFamily& b) {
  return {a.container + b.container, [fa = a.act, fb = b.act](const Value& s, const Value& p) {
            return s.is(ValueKind::Inl) ? Value::inl(fa(s.payload(), p)) : Value::inr(fb(s.payload(), p));
          }};
}

ActionFamily act_product(const ActionFamily& a, const ActionFamily& b) {
  return {a.container * b.container, [fa = a.act, fb = b.act](const Value& s, const Value& p) {
            if (p.is(ValueKind::Inl)) return Value::pair(fa(s.first(), p.payload()), s.second());
            return Value::pair(s.first(), fb(s.second(), p.payload()));
          }};
}

ActionFamily derive_action(const Container& c) {
  switch (c.kind()) {
    case ContainerKind::Const: return act_const(c.shape());
    case ContainerKind::Fixed:
      if (c.fixed_position() == Schema::unit()) {
        // keep the caller's container so boundary checks see the same object
        return {c, [](const Value& state, const Value&) { return state; }};
      }
      break;
    case ContainerKind::Product: return {c, act_product(derive_action(c.left()), derive_action(c.right())).act};
    case ContainerKind::Sum: return {c, act_sum(derive_action(c.left()), derive_action(c.right())).act};
    case ContainerKind::Tensor: return {c, act_tensor(derive_action(c.left()), derive_action(c.right())).act};
    case ContainerKind::Custom: break;
  }
  throw ConfigurationError("no state action for container " + c.describe());
}

bool has_stationary_diff(const Container& c) {
  switch (c.kind()) {
    case ContainerKind::Const: return true;
    case ContainerKind::Fixed: return c.fixed_position() == Schema::unit();
    case ContainerKind::Product: return has_stationary_diff(c.left());
    case ContainerKind::Sum:
    case ContainerKind::Tensor: return has_stationary_diff(c.left()) && has_stationary_diff(c.right());
    case ContainerKind::Custom: return false;
  }
  return false;
}

std::optional<Value> stationary_diff(const Container& c, const Value& v) {
  switch (c.kind()) {
    case ContainerKind::Const: return v;
    case ContainerKind::Fixed:
      if (c.fixed_position() == Schema::unit()) return Value::unit();
      return std::nullopt;
    case ContainerKind::Product: {
      auto d = stationary_diff(c.left(), v.first());
      if (!d) return std::nullopt;
      return Value::inl(*d);
    }
    case ContainerKind::Sum: return stationary_diff(v.is(ValueKind::Inl) ? c.left() : c.right(), v.payload());
    case ContainerKind::Tensor: {
      auto a = stationary_diff(c.left(), v.first());
      auto b = stationary_diff(c.right(), v.second());
      if (!a || !b) return std::nullopt;
      return Value::pair(*a, *b);
    }
    case ContainerKind::Custom: return std::nullopt;
  }
  return std::nullopt;
}

Value default_value(const Schema& s) {
  switch (s.kind()) {
    case SchemaKind::Unit: return Value::unit();
    case SchemaKind::Bool: return Value::boolean(false);
    case SchemaKind::Int: return Value::integer(0);
    case SchemaKind::Nat: return Value::nat(0);
    case SchemaKind::Text: return Value::text("");
    case SchemaKind::Lit: return Value::text(s.literal());
    case SchemaKind::Prod: return Value::pair(default_value(s.left()), default_value(s.right()));
    case SchemaKind::Sum: return Value::inl(default_value(s.left()));
    case SchemaKind::List: return Value::list({});
    case SchemaKind::Map: return Value::map({});
  }
  return Value::unit();
}

StateCell::StateCell(ActionFamily action) : StateCell(action, default_value(action.container.shape())) {}

StateCell::StateCell(ActionFamily action, Value initial)
    : action_(std::move(action)), initial_(std::move(initial)), current_(initial_) {
  if (!conforms(action_.container.shape(), initial_)) {
    throw ContractViolation("initial state does not conform to " + action_.container.shape().to_string());
  }
}

Value StateCell::snapshot() const {
  std::shared_lock lock(mutex_);
  return current_;
}

void StateCell::apply_diff(const Value& diff) {
  std::unique_lock lock(mutex_);
  apply_locked(diff);
}

void StateCell::apply_locked(const Value& diff) {
  const Schema pos = action_.container.position(current_);
  if (!conforms(pos, diff)) {
    throw ContractViolation("state diff " + encode_json(diff) + " does not conform to " + pos.to_string());
  }
  Value next = action_.act(current_, diff);
  if (!conforms(action_.container.shape(), next)) {
    throw ContractViolation("state action produced a value outside " + action_.container.shape().to_string());
  }
  current_ = std::move(next);
}

void StateCell::reset(Value v) {
  if (!conforms(action_.container.shape(), v)) {
    throw ContractViolation("state does not conform to " + action_.container.shape().to_string());
  }
  std::unique_lock lock(mutex_);
  current_ = std::move(v);
}

}  // namespace lenserve
