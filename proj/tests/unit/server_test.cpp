#include <gtest/gtest.h>

#include "lenserve/errors.hpp"
#include "lenserve/generate.hpp"
#include "lenserve/server.hpp"

using namespace lenserve;
using namespace lenserve::dsl;

namespace {

const Schema B = Schema::boolean();
const Schema I = Schema::integer();
const Schema U = Schema::unit();

DepLens negate_int() {
  auto c = Container::constant(I);
  return {c, c, [](const Value& v) { return Value::integer(-v.as_int()); },
          [](const Value&, const Value& r) { return Value::integer(-r.as_int()); }};
}

Server pair_field(bool first) {
  auto s = state_server(Container::constant(Schema::prod(I, B)));
  return first ? s >> fst_lens(I, B) : s >> snd_lens(I, B);
}

// Random request, state and body for s, drawn from its own boundaries.
struct Case {
  Value x, p, r;
};

Case sample(const Server& s, Rng& rng) {
  Value x = generate_value(s.left().shape(), rng);
  Value p = generate_value(s.param().shape(), rng);
  Value r = generate_value(s.right().position(s.view(x, p)), rng);
  return {x, p, r};
}

}  // namespace

TEST(Server, StateServerExposesTheState) {
  auto s = state_server(Container::constant(I));
  EXPECT_EQ(s.view(Value::unit(), Value::integer(4)), Value::integer(4));
  EXPECT_EQ(s.update(Value::unit(), Value::integer(4), Value::integer(9)),
            Value::pair(Value::unit(), Value::integer(9)));
}

TEST(Server, FromLensChecksTheSource) {
  auto s = state_server(Container::constant(I));
  EXPECT_NO_THROW(Server::from_lens(s.left(), s.param(), s.lens()));
  EXPECT_THROW(Server::from_lens(s.left(), Container::constant(B), s.lens()), ConstructionError);
}

TEST(Server, SequentialCompositionTensorsParameters) {
  auto s = state_server(Container::constant(I)) | to_server(negate_int());
  EXPECT_EQ(s.param().shape(), Schema::prod(I, U));
  Value p = Value::pair(Value::integer(5), Value::unit());
  EXPECT_EQ(s.view(Value::unit(), p), Value::integer(-5));
  EXPECT_EQ(s.update(Value::unit(), p, Value::integer(3)),
            Value::pair(Value::unit(), Value::pair(Value::integer(-3), Value::unit())));
  EXPECT_THROW(to_server(negate_int()) | state_server(Container::constant(B)), ConstructionError);
}

TEST(Server, PreAndPostComposition) {
  auto post = state_server(Container::constant(I)) >> negate_int();
  EXPECT_EQ(post.view(Value::unit(), Value::integer(2)), Value::integer(-2));
  EXPECT_EQ(post.update(Value::unit(), Value::integer(2), Value::integer(6)),
            Value::pair(Value::unit(), Value::integer(-6)));

  auto pre = negate_int() << to_server(negate_int());
  EXPECT_EQ(pre.view(Value::integer(3), Value::unit()), Value::integer(3));
  EXPECT_EQ(pre.update(Value::integer(3), Value::unit(), Value::integer(8)),
            Value::pair(Value::integer(8), Value::unit()));
}

TEST(Server, ReparamThroughIdentityIsNoOp) {
  auto s = pair_field(true);
  auto r = reparam(s, dep_identity(s.param()));
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto c = sample(s, rng);
    EXPECT_EQ(r.view(c.x, c.p), s.view(c.x, c.p));
    EXPECT_EQ(r.update(c.x, c.p, c.r), s.update(c.x, c.p, c.r));
  }
  EXPECT_THROW(reparam(s, dep_identity(Container::constant(B))), ConstructionError);
}

TEST(Server, ParallelRunsBothSides) {
  auto s = parallel(state_server(Container::constant(I)), state_server(Container::constant(B)));
  Value x = Value::pair(Value::unit(), Value::unit());
  Value p = Value::pair(Value::integer(1), Value::boolean(true));
  EXPECT_EQ(s.view(x, p), p);
  Value r = Value::pair(Value::integer(2), Value::boolean(false));
  EXPECT_EQ(s.update(x, p, r), Value::pair(x, r));
}

TEST(Server, ExternalChoiceMultipliesStates) {
  auto s = pair_field(true) + state_server(Container::constant(B));
  EXPECT_EQ(s.left().shape(), Schema::sum(U, U));
  EXPECT_EQ(s.param().shape(), Schema::prod(Schema::prod(I, B), B));
  Value p = Value::pair(Value::pair(Value::integer(4), Value::boolean(true)), Value::boolean(false));
  EXPECT_EQ(s.view(Value::inl(Value::unit()), p), Value::inl(Value::integer(4)));
  EXPECT_EQ(s.view(Value::inr(Value::unit()), p), Value::inr(Value::boolean(false)));
  EXPECT_EQ(s.update(Value::inr(Value::unit()), p, Value::boolean(true)),
            Value::pair(Value::unit(), Value::inr(Value::boolean(true))));
}

TEST(Server, ExternalChoiceIgnoresTheOtherState) {
  auto s = pair_field(true) + pair_field(false);
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    Value p = generate_value(Schema::prod(I, B), rng);
    Value q = generate_value(Schema::prod(I, B), rng);
    Value q2 = generate_value(Schema::prod(I, B), rng);
    Value r = generate_value(I, rng);
    Value x = Value::inl(Value::unit());
    ASSERT_EQ(s.update(x, Value::pair(p, q), r), s.update(x, Value::pair(p, q2), r));
  }
}

TEST(Server, CloneChoiceIsReparametrisedExternalChoice) {
  auto a = pair_field(true);
  auto b = pair_field(false);
  auto clone = a & b;
  auto via_reparam = reparam(a + b, dup_dia(a.param()));
  EXPECT_EQ(clone.param().shape(), Schema::prod(I, B));
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto c = sample(clone, rng);
    ASSERT_EQ(clone.view(c.x, c.p), via_reparam.view(c.x, c.p));
    ASSERT_EQ(clone.update(c.x, c.p, c.r), via_reparam.update(c.x, c.p, c.r));
  }
  EXPECT_THROW(a & state_server(Container::constant(B)), ConstructionError);
}

TEST(Server, PathPrefixAddsLiteral) {
  auto s = "boiler" / state_server(Container::constant(B));
  EXPECT_EQ(s.left().shape(), Schema::prod(Schema::lit("boiler"), U));
  Value x = Value::pair(Value::text("boiler"), Value::unit());
  EXPECT_EQ(s.view(x, Value::boolean(true)), Value::boolean(true));
  EXPECT_EQ(s.left().position(x), U);
  EXPECT_EQ(s.update(x, Value::boolean(true), Value::boolean(false)),
            Value::pair(Value::unit(), Value::boolean(false)));
  EXPECT_THROW("a/b" / s, ConstructionError);
  EXPECT_THROW("" / s, ConstructionError);
}

TEST(Server, CapturePrefixEchoesTheSegment) {
  auto s = capture(I) / state_server(Container::constant(B));
  EXPECT_EQ(s.left().shape(), Schema::prod(I, U));
  EXPECT_EQ(s.right().shape(), Schema::prod(I, B));
  Value x = Value::pair(Value::integer(7), Value::unit());
  EXPECT_EQ(s.view(x, Value::boolean(true)), Value::pair(Value::integer(7), Value::boolean(true)));
  EXPECT_EQ(s.right().position(Value::pair(Value::integer(7), Value::boolean(true))), B);
  EXPECT_EQ(s.update(x, Value::boolean(true), Value::boolean(false)),
            Value::pair(Value::unit(), Value::boolean(false)));
  EXPECT_THROW(capture(Schema::list(I)) / s, ConstructionError);
  EXPECT_THROW(capture(Schema::lit("x")) / s, ConstructionError);
}

TEST(Server, GetLensLeavesStateAlone) {
  auto state = Container::constant(I);
  auto s = get_lens(I, state, I,
                    [](const Value& st, const Value& uri) { return Value::integer(st.as_int() + uri.as_int()); });
  EXPECT_EQ(s.view(Value::integer(2), Value::integer(40)), Value::integer(42));
  EXPECT_EQ(s.update(Value::integer(2), Value::integer(40), Value::unit()),
            Value::pair(Value::unit(), Value::integer(40)));
  EXPECT_EQ(s.right().position(Value::integer(42)), U);
}

TEST(Server, PostLensNeedsConstState) {
  auto handler = [](const Value& st, const Value&, const Value& body) {
    return Value::integer(st.as_int() + body.as_int());
  };
  auto s = post_lens(U, Container::constant(I), I, handler);
  EXPECT_EQ(s.view(Value::unit(), Value::integer(1)), Value::unit());
  EXPECT_EQ(s.right().position(Value::unit()), I);
  EXPECT_EQ(s.update(Value::unit(), Value::integer(1), Value::integer(2)),
            Value::pair(Value::unit(), Value::integer(3)));
  EXPECT_THROW(post_lens(U, Container::unit_positions(I), I, handler), ConstructionError);
}
