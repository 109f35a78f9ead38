#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "lenserve/schema.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

// How a container was built. The engine uses this to derive the state action
// of a server's parameter; positions alone do not carry enough structure.
enum class ContainerKind {
  Const,    // positions equal the shape schema everywhere
  Fixed,    // one position schema for every shape (e.g. unit positions)
  Product,  // shapes multiply, positions add
  Sum,      // shapes add, positions follow the chosen side
  Tensor,   // shapes and positions both multiply
  Custom,
};

// A shape schema together with a total family of position schemas indexed by
// shape values.
class Container {
 public:
  using PositionFn = std::function<Schema(const Value&)>;

  // shape s, every position s.
  static Container constant(Schema s);
  // shape s, every position p. Collapses to constant(s) when p == s.
  static Container fixed(Schema shape, Schema position);
  // shape s, every position Unit.
  static Container unit_positions(Schema shape);
  static Container custom(std::string name, Schema shape, PositionFn position);

  static Container product(const Container& a, const Container& b);
  static Container sum(const Container& a, const Container& b);
  static Container tensor(const Container& a, const Container& b);

  ContainerKind kind() const noexcept;
  const Schema& shape() const noexcept;
  // Position schema at v. Throws ContractViolation if v does not conform to
  // the shape.
  Schema position(const Value& v) const;

  // Operands of Product, Sum and Tensor containers.
  const Container& left() const;
  const Container& right() const;
  // Position schema of Const and Fixed containers.
  const Schema& fixed_position() const;

  std::string describe() const;

  friend bool same_boundary(const Container& a, const Container& b, std::size_t samples);

 private:
  struct Rep;
  explicit Container(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};

inline Container operator*(const Container& a, const Container& b) { return Container::product(a, b); }
inline Container operator+(const Container& a, const Container& b) { return Container::sum(a, b); }
inline Container tensor(const Container& a, const Container& b) { return Container::tensor(a, b); }

// Boundary agreement used by composition preconditions: equal shape schemas
// and equal position schemas on `samples` generated shape values (every shape
// value when the shape is finite).
bool same_boundary(const Container& a, const Container& b, std::size_t samples = 32);

}  // namespace lenserve
