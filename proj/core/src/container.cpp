#include "lenserve/container.hpp"

#include <optional>
#include <vector>

#include "lenserve/errors.hpp"
#include "lenserve/generate.hpp"

namespace lenserve {

struct Container::Rep {
  ContainerKind kind;
  Schema shape;
  std::string name;
  PositionFn position;
  std::optional<Schema> fixed;
  std::vector<Container> operands;
};

Container::Container(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Container Container::constant(Schema s) {
  Schema pos = s;
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Const, s, "Const", [pos](const Value&) { return pos; }, pos, {}}));
}

Container Container::fixed(Schema shape, Schema position) {
  if (shape == position) return constant(std::move(shape));
  Schema pos = position;
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Fixed, std::move(shape), "MkCont", [pos](const Value&) { return pos; }, pos, {}}));
}

Container Container::unit_positions(Schema shape) { return fixed(std::move(shape), Schema::unit()); }

Container Container::custom(std::string name, Schema shape, PositionFn position) {
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Custom, std::move(shape), std::move(name), std::move(position), std::nullopt, {}}));
}

Container Container::product(const Container& a, const Container& b) {
  auto pos = [a, b](const Value& v) { return Schema::sum(a.position(v.first()), b.position(v.second())); };
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Product, Schema::prod(a.shape(), b.shape()), "*", pos, std::nullopt, {a, b}}));
}

Container Container::sum(const Container& a, const Container& b) {
  auto pos = [a, b](const Value& v) {
    return v.is(ValueKind::Inl) ? a.position(v.payload()) : b.position(v.payload());
  };
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Sum, Schema::sum(a.shape(), b.shape()), "+", pos, std::nullopt, {a, b}}));
}

Container Container::tensor(const Container& a, const Container& b) {
  auto pos = [a, b](const Value& v) { return Schema::prod(a.position(v.first()), b.position(v.second())); };
  return Container(std::make_shared<const Rep>(
      Rep{ContainerKind::Tensor, Schema::prod(a.shape(), b.shape()), "tensor", pos, std::nullopt, {a, b}}));
}

ContainerKind Container::kind() const noexcept { return rep_->kind; }

const Schema& Container::shape() const noexcept { return rep_->shape; }

Schema Container::position(const Value& v) const {
  if (!conforms(rep_->shape, v)) {
    throw ContractViolation("position requested at a value outside the shape " + rep_->shape.to_string());
  }
  return rep_->position(v);
}

const Container& Container::left() const {
  if (rep_->operands.size() != 2) throw ContractViolation("container has no operands: " + describe());
  return rep_->operands[0];
}

const Container& Container::right() const {
  if (rep_->operands.size() != 2) throw ContractViolation("container has no operands: " + describe());
  return rep_->operands[1];
}

const Schema& Container::fixed_position() const {
  if (!rep_->fixed) throw ContractViolation("container positions are not fixed: " + describe());
  return *rep_->fixed;
}

std::string Container::describe() const {
  switch (rep_->kind) {
    case ContainerKind::Const: return "Const (" + rep_->shape.to_string() + ")";
    case ContainerKind::Fixed:
      return "MkCont (" + rep_->shape.to_string() + ") (const " + rep_->fixed->to_string() + ")";
    case ContainerKind::Product: return "(" + left().describe() + " * " + right().describe() + ")";
    case ContainerKind::Sum: return "(" + left().describe() + " + " + right().describe() + ")";
    case ContainerKind::Tensor: return "(" + left().describe() + " (x) " + right().describe() + ")";
    case ContainerKind::Custom: return rep_->name + " (" + rep_->shape.to_string() + ")";
  }
  return "?";
}

bool same_boundary(const Container& a, const Container& b, std::size_t samples) {
  if (a.rep_ == b.rep_) return true;
  if (!(a.shape() == b.shape())) return false;
  bool a_fixed = a.kind() == ContainerKind::Const || a.kind() == ContainerKind::Fixed;
  bool b_fixed = b.kind() == ContainerKind::Const || b.kind() == ContainerKind::Fixed;
  if (a_fixed && b_fixed) return a.fixed_position() == b.fixed_position();

  if (auto all = enumerate_values(a.shape(), samples)) {
    for (const auto& v : *all) {
      if (!(a.position(v) == b.position(v))) return false;
    }
    return true;
  }
  Rng rng(0x5eed);
  for (std::size_t i = 0; i < samples; ++i) {
    Value v = generate_value(a.shape(), rng);
    if (!(a.position(v) == b.position(v))) return false;
  }
  return true;
}

}  // namespace lenserve
