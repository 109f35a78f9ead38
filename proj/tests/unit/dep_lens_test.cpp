#include <gtest/gtest.h>

#include "lenserve/dep_lens.hpp"
#include "lenserve/errors.hpp"

using namespace lenserve;

namespace {

const Schema B = Schema::boolean();
const Schema I = Schema::integer();

// Shape Bool; positions Int at true and String at false.
Container picky() {
  return Container::custom("Pick", B, [](const Value& v) { return v.as_bool() ? I : Schema::text(); });
}

DepLens negate_int() {
  auto c = Container::constant(I);
  return {c, c, [](const Value& v) { return Value::integer(-v.as_int()); },
          [](const Value&, const Value& r) { return Value::integer(-r.as_int()); }};
}

}  // namespace

TEST(DepLens, IdentityIsNeutralForComposition) {
  auto l = negate_int();
  auto left = dep_compose(dep_identity(l.src), l);
  auto right = dep_compose(l, dep_identity(l.dst));
  for (std::int64_t i : {-3, 0, 8}) {
    Value v = Value::integer(i);
    EXPECT_EQ(left.view(v), l.view(v));
    EXPECT_EQ(right.view(v), l.view(v));
    EXPECT_EQ(left.update(v, Value::integer(5)), l.update(v, Value::integer(5)));
    EXPECT_EQ(right.update(v, Value::integer(5)), l.update(v, Value::integer(5)));
  }
}

TEST(DepLens, CompositionIsAssociative) {
  auto l = negate_int();
  auto add1 = DepLens{l.src, l.dst, [](const Value& v) { return Value::integer(v.as_int() + 1); },
                      [](const Value&, const Value& r) { return Value::integer(r.as_int() * 2); }};
  auto ab_c = dep_compose(dep_compose(l, add1), l);
  auto a_bc = dep_compose(l, dep_compose(add1, l));
  for (std::int64_t i = -5; i <= 5; ++i) {
    Value v = Value::integer(i);
    EXPECT_EQ(ab_c.view(v), a_bc.view(v));
    EXPECT_EQ(ab_c.update(v, Value::integer(i * 3)), a_bc.update(v, Value::integer(i * 3)));
  }
}

TEST(DepLens, ComposeRejectsMismatch) {
  EXPECT_THROW(dep_compose(negate_int(), dep_identity(Container::constant(B))), ConstructionError);
  EXPECT_THROW(dep_compose(dep_identity(picky()), dep_identity(Container::constant(B))), ConstructionError);
}

TEST(DepLens, ParallelActsComponentwise) {
  auto p = dep_parallel(negate_int(), dep_identity(picky()));
  Value x = Value::pair(Value::integer(2), Value::boolean(false));
  EXPECT_EQ(p.view(x), Value::pair(Value::integer(-2), Value::boolean(false)));
  EXPECT_EQ(p.src.position(x), Schema::prod(I, Schema::text()));
  EXPECT_EQ(p.update(x, Value::pair(Value::integer(7), Value::text("s"))),
            Value::pair(Value::integer(-7), Value::text("s")));
}

TEST(DepLens, EmbedPlainUsesFixedPositions) {
  auto l = embed_plain(fst_lens(I, B));
  EXPECT_EQ(l.src.kind(), ContainerKind::Const);
  EXPECT_EQ(l.dst.position(Value::integer(1)), I);
  EXPECT_EQ(l.update(Value::pair(Value::integer(1), Value::boolean(true)), Value::integer(3)),
            Value::pair(Value::integer(3), Value::boolean(true)));

  PlainLens poly{{B, Schema::unit()}, {I, Schema::text()}, [](const Value& x) { return Value::integer(x.as_bool()); },
                 [](const Value&, const Value&) { return Value::unit(); }};
  auto d = embed_plain(poly);
  EXPECT_EQ(d.src.kind(), ContainerKind::Fixed);
  EXPECT_EQ(d.src.position(Value::boolean(true)), Schema::unit());
  EXPECT_EQ(d.dst.position(Value::integer(0)), Schema::text());
}

TEST(DepLens, ContractHoldsForWellTypedLens) {
  Rng rng(1);
  auto dependent = DepLens{picky(), Container::constant(B), [](const Value& v) { return v; },
                           [](const Value& v, const Value&) {
                             return v.as_bool() ? Value::integer(1) : Value::text("no");
                           }};
  EXPECT_FALSE(verify_contract(dependent, 200, rng).has_value());
}

TEST(DepLens, ContractBreachIsReported) {
  Rng rng(2);
  auto wrong = DepLens{picky(), Container::constant(B), [](const Value& v) { return v; },
                       [](const Value&, const Value&) { return Value::integer(1); }};
  auto breach = verify_contract(wrong, 200, rng);
  ASSERT_TRUE(breach.has_value());
  EXPECT_EQ(breach->shape_value, Value::boolean(false));

  auto bad_view = DepLens{Container::constant(B), Container::constant(I), [](const Value& v) { return v; },
                          [](const Value& v, const Value&) { return v; }};
  EXPECT_TRUE(verify_contract(bad_view, 10, rng).has_value());
}
