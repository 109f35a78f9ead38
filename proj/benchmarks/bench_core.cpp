#include <benchmark/benchmark.h>

#include "lenserve/demos.hpp"
#include "lenserve/engine.hpp"
#include "lenserve/generate.hpp"
#include "lenserve/json_codec.hpp"
#include "lenserve/routing.hpp"

using namespace lenserve;

namespace {

void BM_ParseUriCalculator(benchmark::State& state) {
  auto parser = uri_parser(demos::calculator().left().shape());
  for (auto _ : state) benchmark::DoNotOptimize(parse_uri(parser, "/div/123456/-789"));
}
BENCHMARK(BM_ParseUriCalculator);

void BM_ParseUriCombined(benchmark::State& state) {
  auto parser = uri_parser(demos::combined().left().shape());
  for (auto _ : state) benchmark::DoNotOptimize(parse_uri(parser, "/iot/lights/2"));
}
BENCHMARK(BM_ParseUriCombined);

void BM_HandleGet(benchmark::State& state) {
  auto p = prepare(demos::combined());
  for (auto _ : state) benchmark::DoNotOptimize(p.handle_get("/calculator/mul/4/5"));
}
BENCHMARK(BM_HandleGet);

void BM_HandlePostTodo(benchmark::State& state) {
  auto p = prepare(demos::todo());
  std::uint64_t user = 0;
  for (auto _ : state) {
    // rotate users so lists stay short
    benchmark::DoNotOptimize(p.handle_post("/add/" + std::to_string(user++ % 64), "\"item\""));
    if (user % 4096 == 0) p.state().reset(Value::map({}));
  }
}
BENCHMARK(BM_HandlePostTodo);

Value sample_value(std::size_t items) {
  std::vector<Value::MapEntry> entries;
  for (std::size_t i = 0; i < items; ++i) {
    entries.emplace_back(Value::nat(i), Value::list({Value::text("buy milk"), Value::text("call home")}));
  }
  return Value::map(std::move(entries));
}

void BM_EncodeJson(benchmark::State& state) {
  Value v = sample_value(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(encode_json(v));
}
BENCHMARK(BM_EncodeJson)->Arg(8)->Arg(256);

void BM_DecodeJson(benchmark::State& state) {
  std::string text = encode_json(sample_value(static_cast<std::size_t>(state.range(0))));
  Schema s = demos::todo_state();
  for (auto _ : state) benchmark::DoNotOptimize(decode_json(s, text));
}
BENCHMARK(BM_DecodeJson)->Arg(8)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
