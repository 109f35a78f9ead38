// lenserve command line: serve a demo server, list its routes, or run the
// algebraic property suite.
//
//   lenserve serve --server <calculator|iot|todo|combined> --port <n> [--snapshot <path>]
//   lenserve routes --server <name>
//   lenserve laws [--seed <n>] [--samples <n>]

#include <pthread.h>
#include <signal.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "lenserve/demos.hpp"
#include "lenserve/engine.hpp"
#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"
#include "lenserve/properties.hpp"
#include "lenserve/routing.hpp"

namespace {

constexpr int kUsageError = 2;

std::optional<lenserve::demos::Demo> demo_or_usage(const std::string& name) {
  auto demo = lenserve::demos::parse_demo(name);
  if (!demo) std::cerr << "unknown server '" << name << "' (expected calculator, iot, todo or combined)\n";
  return demo;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_snapshot(const std::string& path, const lenserve::Value& state) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << lenserve::encode_json(state) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

int serve(const std::string& name, const std::string& host, int port, const std::string& snapshot,
          std::size_t max_body) {
  auto demo = demo_or_usage(name);
  if (!demo) return kUsageError;

  // Block termination signals in every thread; a dedicated thread waits for them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  lenserve::EngineConfig cfg;
  cfg.host = host;
  cfg.port = port;
  cfg.max_body_bytes = max_body;
  cfg.log = [](const std::string& line) { std::cerr << line << '\n'; };

  lenserve::Server server = lenserve::demos::build(*demo);
  lenserve::PreparedServer prepared = [&] {
    if (!snapshot.empty() && std::filesystem::exists(snapshot)) {
      lenserve::Value initial = lenserve::decode_json(server.param().shape(), read_file(snapshot));
      return lenserve::prepare(server, cfg, initial);
    }
    return lenserve::prepare(server, cfg);
  }();

  lenserve::HttpEngine engine(prepared);
  int bound = engine.bind();
  std::cerr << "serving " << name << " on " << host << ":" << bound << '\n';

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    engine.stop();
  });
  engine.serve();
  // serve() can also return on its own (listen failure); release the waiter.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();

  if (!snapshot.empty()) write_snapshot(snapshot, prepared.state().snapshot());
  return 0;
}

int routes(const std::string& name) {
  auto demo = demo_or_usage(name);
  if (!demo) return kUsageError;
  for (const auto& route : lenserve::list_routes(lenserve::demos::build(*demo).left().shape())) {
    std::cout << route << '\n';
  }
  return 0;
}

int laws(std::uint64_t seed, std::size_t samples) {
  bool all = true;
  for (const auto& result : lenserve::run_property_suite(seed, samples)) {
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << '\n';
    if (!result.passed && !result.detail.empty()) std::cout << "       " << result.detail << '\n';
    all = all && result.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Servers as composable dependent lenses"};
  app.require_subcommand(1);

  std::string server_name;
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string snapshot;
  std::size_t max_body = 1 << 20;
  auto* serve_cmd = app.add_subcommand("serve", "Run a demo server until SIGINT/SIGTERM");
  serve_cmd->add_option("--server", server_name, "calculator, iot, todo or combined")->required();
  serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--snapshot", snapshot, "State file loaded at start and written at shutdown");
  serve_cmd->add_option("--max-body", max_body, "Largest accepted request body in bytes")->check(CLI::PositiveNumber);

  std::string routes_name;
  auto* routes_cmd = app.add_subcommand("routes", "Print the URI grammar of a demo server");
  routes_cmd->add_option("--server", routes_name, "calculator, iot, todo or combined")->required();

  std::uint64_t seed = 20240101;
  std::size_t samples = 1000;
  auto* laws_cmd = app.add_subcommand("laws", "Run the lens-law and combinator property suite");
  laws_cmd->add_option("--seed", seed, "Random seed");
  laws_cmd->add_option("--samples", samples, "Cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*serve_cmd) return serve(server_name, host, port, snapshot, max_body);
    if (*routes_cmd) return routes(routes_name);
    if (*laws_cmd) return laws(seed, samples);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return kUsageError;
}
