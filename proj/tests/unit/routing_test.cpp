#include <gtest/gtest.h>

#include "lenserve/errors.hpp"
#include "lenserve/generate.hpp"
#include "lenserve/routing.hpp"

using namespace lenserve;

namespace {

const Schema I = Schema::integer();
const Schema N = Schema::nat();
Value txt(const char* s) { return Value::text(s); }

Schema user_name() { return Schema::prod(Schema::lit("user"), Schema::prod(I, Schema::lit("name"))); }

Schema arith() {
  auto op = [](const char* name) { return Schema::prod(Schema::lit(name), Schema::prod(I, I)); };
  return Schema::sum(Schema::sum(op("add"), op("sub")), op("mul"));
}

}  // namespace

TEST(Routing, UserNameExample) {
  auto v = parse_uri(user_name(), "/user/3/name");
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, Value::pair(txt("user"), Value::pair(Value::integer(3), txt("name"))));
  EXPECT_FALSE(parse_uri(user_name(), "/user/book").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "/user/3").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "/user/3/name/extra").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "user/3/name").has_value());
}

TEST(Routing, TrailingSlashAndEscapes) {
  EXPECT_TRUE(parse_uri(user_name(), "/user/3/name/").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "/user/3/name//").has_value());
  EXPECT_TRUE(parse_uri(user_name(), "/us%65r/3/name").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "/user/3/name%").has_value());
  EXPECT_FALSE(parse_uri(user_name(), "/user/3/nam%zz").has_value());
}

TEST(Routing, SplitPath) {
  using Segs = std::vector<std::string>;
  EXPECT_EQ(split_path("/"), Segs{});
  EXPECT_EQ(split_path("/a/b%2Fc/"), (Segs{"a", "b/c"}));
  EXPECT_EQ(split_path("/a//b"), (Segs{"a", "", "b"}));
  EXPECT_FALSE(split_path("").has_value());
  EXPECT_FALSE(split_path("a").has_value());
}

TEST(Routing, OrderedAlternativesTagBranches) {
  auto v = parse_uri(arith(), "/sub/1/2");
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, Value::inl(Value::inr(Value::pair(txt("sub"), Value::pair(Value::integer(1), Value::integer(2))))));
  auto m = parse_uri(arith(), "/mul/-4/5");
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->is(ValueKind::Inr));
  EXPECT_FALSE(parse_uri(arith(), "/div/1/2").has_value());
}

TEST(Routing, LeftBiasOnOverlap) {
  Schema s = Schema::sum(N, I);
  EXPECT_EQ(parse_uri(s, "/5"), Value::inl(Value::nat(5)));
  EXPECT_EQ(parse_uri(s, "/-5"), Value::inr(Value::integer(-5)));
}

TEST(Routing, BacktracksIntoLaterAlternative) {
  Schema x = Schema::lit("x");
  Schema y = Schema::lit("y");
  Schema s = Schema::prod(Schema::sum(x, Schema::prod(x, y)), y);
  EXPECT_EQ(parse_uri(s, "/x/y"), Value::pair(Value::inl(txt("x")), txt("y")));
  EXPECT_EQ(parse_uri(s, "/x/y/y"), Value::pair(Value::inr(Value::pair(txt("x"), txt("y"))), txt("y")));
}

TEST(Routing, CaptureLexing) {
  EXPECT_EQ(parse_uri(I, "/-12"), Value::integer(-12));
  EXPECT_FALSE(parse_uri(I, "/+12").has_value());
  EXPECT_FALSE(parse_uri(I, "/-").has_value());
  EXPECT_FALSE(parse_uri(I, "/1e3").has_value());
  EXPECT_FALSE(parse_uri(I, "/9223372036854775808").has_value());
  EXPECT_EQ(parse_uri(I, "/-9223372036854775808"), Value::integer(std::numeric_limits<std::int64_t>::min()));
  EXPECT_FALSE(parse_uri(N, "/-1").has_value());
  EXPECT_EQ(parse_uri(Schema::boolean(), "/false"), Value::boolean(false));
  EXPECT_FALSE(parse_uri(Schema::boolean(), "/True").has_value());
  EXPECT_EQ(parse_uri(Schema::text(), "/hello%20world"), txt("hello world"));
  EXPECT_FALSE(parse_uri(Schema::text(), "/").has_value());
}

TEST(Routing, UnitMatchesRoot) {
  EXPECT_EQ(parse_uri(Schema::unit(), "/"), Value::unit());
  EXPECT_FALSE(parse_uri(Schema::unit(), "/a").has_value());
}

TEST(Routing, CollectionsHaveNoGrammar) {
  EXPECT_FALSE(is_uri_parsable(Schema::prod(Schema::lit("a"), Schema::list(I))));
  EXPECT_TRUE(is_uri_parsable(arith()));
  EXPECT_THROW(uri_parser(Schema::list(I)), ConfigurationError);
  EXPECT_THROW(capture_parser(Schema::lit("a")), ConfigurationError);
  EXPECT_THROW(render_uri(Schema::list(I), Value::list({})), ConfigurationError);
}

TEST(Routing, RenderAndListRoutes) {
  Value v = Value::inl(Value::inr(Value::pair(txt("sub"), Value::pair(Value::integer(1), Value::integer(-2)))));
  EXPECT_EQ(render_uri(arith(), v), "/sub/1/-2");
  EXPECT_EQ(render_uri(Schema::text(), txt("a b/c")), "/a%20b%2Fc");
  EXPECT_EQ(render_uri(Schema::unit(), Value::unit()), "/");
  EXPECT_EQ(list_routes(arith()),
            (std::vector<std::string>{"/add/Int:n1/Int:n2", "/sub/Int:n1/Int:n2", "/mul/Int:n1/Int:n2"}));
  EXPECT_EQ(list_routes(Schema::prod(Schema::text(), Schema::sum(Schema::unit(), N))),
            (std::vector<std::string>{"/String:n1", "/String:n1/Nat:n2"}));
}

TEST(Routing, RenderedValuesParseBack) {
  Rng rng(21);
  GenOptions opts;
  opts.non_empty_text = true;
  for (int i = 0; i < 500; ++i) {
    Schema s = generate_uri_schema(rng, 4, true);
    Value v = generate_value(s, rng, opts);
    auto back = parse_uri(s, render_uri(s, v));
    ASSERT_TRUE(back.has_value()) << s << " " << render_uri(s, v);
    ASSERT_EQ(*back, v) << s;
  }
}

TEST(Routing, StripChoicesFollowsContainer) {
  auto c = Container::constant(I) + (Container::constant(Schema::boolean()) + Container::constant(I));
  EXPECT_EQ(strip_choices(c, Value::inr(Value::inl(Value::boolean(true)))), Value::boolean(true));
  EXPECT_EQ(encode_response(c, Value::inl(Value::integer(5))), "5");
  EXPECT_THROW(encode_response(c, Value::integer(5)), ContractViolation);

  auto t = tensor(Container::constant(I) + Container::constant(I), Container::constant(I));
  EXPECT_EQ(encode_response(t, Value::pair(Value::inr(Value::integer(1)), Value::integer(2))), "[1,2]");
}

TEST(Routing, BodyCodec) {
  EXPECT_EQ(serialize(I, Value::integer(3)), "3");
  EXPECT_THROW(serialize(I, Value::boolean(true)), ContractViolation);
  EXPECT_EQ(deserialize_body(Schema::text(), R"("Call")"), txt("Call"));
  EXPECT_THROW(deserialize_body(Schema::text(), "Call"), DecodeError);
}
