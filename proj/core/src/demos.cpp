#include "lenserve/demos.hpp"

#include <limits>

#include "lenserve/errors.hpp"

namespace lenserve::demos {

using namespace lenserve::dsl;

std::optional<Demo> parse_demo(std::string_view name) {
  if (name == "calculator") return Demo::Calculator;
  if (name == "iot") return Demo::Iot;
  if (name == "todo") return Demo::Todo;
  if (name == "combined") return Demo::Combined;
  return std::nullopt;
}

std::string_view demo_name(Demo d) {
  switch (d) {
    case Demo::Calculator: return "calculator";
    case Demo::Iot: return "iot";
    case Demo::Todo: return "todo";
    case Demo::Combined: return "combined";
  }
  return "?";
}

namespace {

template <typename Op>
Server arithmetic(Op op) {
  return get_lens(Schema::prod(Schema::integer(), Schema::integer()), Container::constant(Schema::unit()),
                  Schema::integer(), [op](const Value&, const Value& uri) {
                    return Value::integer(op(uri.first().as_int(), uri.second().as_int()));
                  });
}

[[noreturn]] void overflow() { throw DomainError("integer overflow"); }

}  // namespace

Server calculator() {
  Server add = "add" / arithmetic([](std::int64_t a, std::int64_t b) {
                 std::int64_t r;
                 if (__builtin_add_overflow(a, b, &r)) overflow();
                 return r;
               });
  Server sub = "sub" / arithmetic([](std::int64_t a, std::int64_t b) {
                 std::int64_t r;
                 if (__builtin_sub_overflow(a, b, &r)) overflow();
                 return r;
               });
  Server mul = "mul" / arithmetic([](std::int64_t a, std::int64_t b) {
                 std::int64_t r;
                 if (__builtin_mul_overflow(a, b, &r)) overflow();
                 return r;
               });
  Server div = "div" / arithmetic([](std::int64_t a, std::int64_t b) -> std::int64_t {
                 if (b == 0) throw DomainError("division by zero");
                 if (b == -1 && a == std::numeric_limits<std::int64_t>::min()) overflow();
                 return a / b;
               });
  return add & sub & mul & div;
}

Schema home_state() { return Schema::prod(Schema::boolean(), Schema::prod(Schema::boolean(), Schema::boolean())); }

Server iot() {
  const Schema b = Schema::boolean();
  const Schema pair = Schema::prod(b, b);
  Server state_endpoint = state_server(Container::constant(home_state()));
  Server lights = state_endpoint >> snd_lens(b, pair);
  return ("boiler" / state_endpoint >> fst_lens(b, pair)) &
         "lights" / ("1" / lights >> fst_lens(b, b) & "2" / lights >> snd_lens(b, b));
}

Schema todo_state() { return Schema::map(Schema::nat(), Schema::list(Schema::text())); }

Server todo() {
  const Container state = Container::constant(todo_state());
  Server get_todos = "all" / get_lens(Schema::nat(), state, Schema::list(Schema::text()),
                                      [](const Value& st, const Value& user) {
                                        return st.lookup(user).value_or(Value::list({}));
                                      });
  Server post_todo = "add" / post_lens(Schema::nat(), state, Schema::text(),
                                       [](const Value& st, const Value& user, const Value& item) {
                                         std::vector<Value> items{item};
                                         if (auto existing = st.lookup(user)) {
                                           const auto& old = existing->items();
                                           items.insert(items.end(), old.begin(), old.end());
                                         }
                                         return st.with_entry(user, Value::list(std::move(items)));
                                       });
  return get_todos & post_todo;
}

Server combined() { return "todo" / todo() + "calculator" / calculator() + "iot" / iot(); }

Server build(Demo d) {
  switch (d) {
    case Demo::Calculator: return calculator();
    case Demo::Iot: return iot();
    case Demo::Todo: return todo();
    case Demo::Combined: return combined();
  }
  throw std::invalid_argument("unknown demo");
}

Schema address_schema() { return prod_of({Schema::text(), Schema::text(), Schema::integer()}); }

Schema user_schema() { return prod_of({Schema::text(), address_schema(), Schema::text()}); }

PlainLens user_address_lens() {
  return {Boundary::mono(user_schema()), Boundary::mono(address_schema()),
          [](const Value& user) { return user.second().first(); },
          [](const Value& user, const Value& address) {
            return Value::pair(user.first(), Value::pair(address, user.second().second()));
          }};
}

PlainLens street_number_lens() {
  return {Boundary::mono(address_schema()), Boundary::mono(Schema::integer()),
          [](const Value& address) { return address.second().second(); },
          [](const Value& address, const Value& number) {
            return Value::pair(address.first(), Value::pair(address.second().first(), number));
          }};
}

}  // namespace lenserve::demos
