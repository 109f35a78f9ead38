#include <gtest/gtest.h>

#include <thread>
#include <utility>
#include <vector>

#include "lenserve/errors.hpp"
#include "lenserve/generate.hpp"
#include "lenserve/state.hpp"

using namespace lenserve;

namespace {

const Schema B = Schema::boolean();
const Schema I = Schema::integer();
const Schema U = Schema::unit();

Value pair(Value a, Value b) { return Value::pair(std::move(a), std::move(b)); }

}  // namespace

TEST(StateAction, ConstReplaces) {
  auto a = act_const(I);
  EXPECT_EQ(a.act(Value::integer(1), Value::integer(9)), Value::integer(9));
}

TEST(StateAction, UnitPositionsKeepState) {
  auto a = act_unit_positions(I);
  EXPECT_EQ(a.act(Value::integer(1), Value::unit()), Value::integer(1));
}

TEST(StateAction, TensorActsOnBoth) {
  auto a = act_tensor(act_const(I), act_unit_positions(B));
  EXPECT_EQ(a.act(pair(Value::integer(1), Value::boolean(true)), pair(Value::integer(2), Value::unit())),
            pair(Value::integer(2), Value::boolean(true)));
}

TEST(StateAction, SumKeepsTheTag) {
  auto a = act_sum(act_const(I), act_const(B));
  EXPECT_EQ(a.act(Value::inr(Value::boolean(false)), Value::boolean(true)), Value::inr(Value::boolean(true)));
  EXPECT_EQ(a.act(Value::inl(Value::integer(0)), Value::integer(3)), Value::inl(Value::integer(3)));
}

TEST(StateAction, ProductTouchesOneSide) {
  auto a = act_product(act_const(I), act_const(B));
  Value s = pair(Value::integer(1), Value::boolean(false));
  EXPECT_EQ(a.act(s, Value::inl(Value::integer(5))), pair(Value::integer(5), Value::boolean(false)));
  EXPECT_EQ(a.act(s, Value::inr(Value::boolean(true))), pair(Value::integer(1), Value::boolean(true)));
}

TEST(StateAction, DeriveFollowsConstruction) {
  auto c = (Container::constant(I) * Container::constant(B)) * Container::unit_positions(Schema::text());
  auto a = derive_action(c);
  Value s = pair(pair(Value::integer(1), Value::boolean(false)), Value::text("t"));
  EXPECT_EQ(a.act(s, Value::inl(Value::inr(Value::boolean(true)))),
            pair(pair(Value::integer(1), Value::boolean(true)), Value::text("t")));
  EXPECT_EQ(a.act(s, Value::inr(Value::unit())), s);
}

TEST(StateAction, DeriveRejectsOpaqueContainers) {
  auto custom = Container::custom("Pick", B, [](const Value&) { return I; });
  EXPECT_THROW(derive_action(custom), ConfigurationError);
  EXPECT_THROW(derive_action(Container::constant(I) * custom), ConfigurationError);
  EXPECT_THROW(derive_action(Container::fixed(B, I)), ConfigurationError);
}

TEST(StateAction, StationaryDiffIsIdentity) {
  Rng rng(31);
  std::vector<Container> cs{Container::constant(I), Container::unit_positions(B),
                            Container::constant(I) * Container::constant(B),
                            tensor(Container::constant(I), Container::unit_positions(B)),
                            Container::constant(I) + Container::constant(B),
                            (Container::constant(I) * Container::constant(B)) * Container::constant(B)};
  for (const auto& c : cs) {
    ASSERT_TRUE(has_stationary_diff(c)) << c.describe();
    auto act = derive_action(c);
    for (int i = 0; i < 50; ++i) {
      Value v = generate_value(c.shape(), rng);
      auto d = stationary_diff(c, v);
      ASSERT_TRUE(d.has_value());
      ASSERT_TRUE(conforms(c.position(v), *d)) << c.describe();
      ASSERT_EQ(act.act(v, *d), v) << c.describe();
    }
  }
  auto custom = Container::custom("Pick", B, [](const Value&) { return I; });
  EXPECT_FALSE(has_stationary_diff(custom));
  EXPECT_FALSE(stationary_diff(custom, Value::boolean(true)).has_value());
  EXPECT_FALSE(has_stationary_diff(Container::fixed(B, I)));
}

TEST(StateAction, DefaultValues) {
  EXPECT_EQ(default_value(Schema::prod(B, Schema::prod(B, B))),
            pair(Value::boolean(false), pair(Value::boolean(false), Value::boolean(false))));
  EXPECT_EQ(default_value(Schema::sum(I, B)), Value::inl(Value::integer(0)));
  EXPECT_EQ(default_value(Schema::lit("x")), Value::text("x"));
  EXPECT_EQ(default_value(Schema::map(Schema::nat(), Schema::list(Schema::text()))), Value::map({}));
  EXPECT_EQ(default_value(Schema::text()), Value::text(""));
}

TEST(StateCell, StartsAtDefaultOrGivenState) {
  StateCell cell(act_const(I));
  EXPECT_EQ(cell.snapshot(), Value::integer(0));
  StateCell seeded(act_const(I), Value::integer(4));
  EXPECT_EQ(seeded.snapshot(), Value::integer(4));
  EXPECT_EQ(seeded.initial(), Value::integer(4));
  EXPECT_THROW(StateCell(act_const(I), Value::boolean(true)), ContractViolation);
}

TEST(StateCell, RejectsIllTypedDiffs) {
  StateCell cell(derive_action(Container::constant(I) * Container::constant(B)));
  EXPECT_THROW(cell.apply_diff(Value::inl(Value::boolean(true))), ContractViolation);
  EXPECT_THROW(cell.apply_diff(Value::integer(1)), ContractViolation);
  EXPECT_EQ(cell.snapshot(), pair(Value::integer(0), Value::boolean(false)));
  cell.apply_diff(Value::inr(Value::boolean(true)));
  EXPECT_EQ(cell.snapshot(), pair(Value::integer(0), Value::boolean(true)));
}

TEST(StateCell, ActionLeavingTheShapeIsRejected) {
  ActionFamily broken{Container::constant(I), [](const Value&, const Value&) { return Value::boolean(true); }};
  StateCell cell(broken);
  EXPECT_THROW(cell.apply_diff(Value::integer(1)), ContractViolation);
  EXPECT_EQ(cell.snapshot(), Value::integer(0));
}

TEST(StateCell, TransactionRollsBackOnThrow) {
  StateCell cell(act_const(I));
  EXPECT_THROW(cell.transact([](const Value&) -> std::pair<int, Value> { throw DomainError("no"); }), DomainError);
  EXPECT_EQ(cell.snapshot(), Value::integer(0));
  int seen = cell.transact([](const Value& s) {
    return std::pair{static_cast<int>(s.as_int()), Value::integer(s.as_int() + 1)};
  });
  EXPECT_EQ(seen, 0);
  EXPECT_EQ(cell.snapshot(), Value::integer(1));
}

TEST(StateCell, ResetChecksShape) {
  StateCell cell(act_const(I));
  cell.reset(Value::integer(7));
  EXPECT_EQ(cell.snapshot(), Value::integer(7));
  EXPECT_THROW(cell.reset(Value::text("x")), ContractViolation);
}

TEST(StateCell, ConcurrentTransactionsDoNotLoseUpdates) {
  StateCell cell(act_const(I));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 250; ++i) {
        cell.transact([](const Value& s) { return std::pair{0, Value::integer(s.as_int() + 1)}; });
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(cell.snapshot(), Value::integer(1000));
}
