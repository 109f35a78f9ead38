#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lenserve/plain_lens.hpp"
#include "lenserve/server.hpp"

namespace lenserve::demos {

enum class Demo { Calculator, Iot, Todo, Combined };

std::optional<Demo> parse_demo(std::string_view name);
std::string_view demo_name(Demo d);

// /add, /sub, /mul, /div, each /Int/Int -> Int over a unit state. Division
// truncates toward zero; dividing by zero or overflowing is a domain error.
Server calculator();

// Bool * (Bool * Bool) home state: /boiler, /lights/1, /lights/2, each
// readable with GET and writable by POSTing a Bool.
Schema home_state();
Server iot();

// Dict Nat (List String) state: GET /all/<user> lists todos, newest first;
// POST /add/<user> with a JSON string body prepends one.
Schema todo_state();
Server todo();

// "todo" / todo +&&&+ "calculator" / calculator +&&&+ "iot" / iot
Server combined();

Server build(Demo d);

// Records used to demonstrate nested updates:
//   Address = city * (streetName * streetNumber)
//   User    = username * (address * birthdate)
Schema address_schema();
Schema user_schema();
// User -> Address
PlainLens user_address_lens();
// Address -> street number
PlainLens street_number_lens();

}  // namespace lenserve::demos
