#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "lenserve/routing.hpp"
#include "lenserve/server.hpp"
#include "lenserve/state.hpp"

namespace lenserve {

struct EngineConfig {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0 binds an ephemeral port
  std::size_t max_body_bytes = 1 << 20;
  // Receives one line per request: method, path, status, latency.
  std::function<void(const std::string&)> log;

  // Throws ConfigurationError if port is outside 0..65535 or the body limit is 0.
  void validate() const;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// A server with everything the engine needs derived up front: the URI parser
// for its left shape, the action of its parameter and the initial state.
class PreparedServer {
 public:
  const Server& server() const noexcept { return *server_; }
  const UriParser& uri() const noexcept { return *uri_; }
  StateCell& state() const noexcept { return *cell_; }
  const EngineConfig& config() const noexcept { return *config_; }

  // Forward pass. 404 on route miss, 400 on handler domain errors, 500 when
  // the server breaks its typing contract. Never changes the state.
  HttpResponse handle_get(std::string_view path) const;

  // Forward pass to find the body type, then backward pass and state update,
  // all as one transaction on the state cell. An empty body reads as null.
  HttpResponse handle_post(std::string_view path, std::string_view body) const;

 private:
  friend PreparedServer prepare(const Server& server, const EngineConfig& cfg);
  friend PreparedServer prepare(const Server& server, const EngineConfig& cfg, Value initial);
  PreparedServer() = default;

  std::shared_ptr<const Server> server_;
  std::shared_ptr<const UriParser> uri_;
  std::shared_ptr<StateCell> cell_;
  std::shared_ptr<const EngineConfig> config_;
};

// Throws ConfigurationError naming the container whose grammar or action
// could not be derived.
PreparedServer prepare(const Server& server, const EngineConfig& cfg = {});
// As above, starting from the given state instead of the default one.
PreparedServer prepare(const Server& server, const EngineConfig& cfg, Value initial);

// HTTP/1.1 front end: GET and POST go to the prepared server, any other
// method gets 405, oversized bodies 413.
class HttpEngine {
 public:
  explicit HttpEngine(PreparedServer prepared);
  ~HttpEngine();

  HttpEngine(const HttpEngine&) = delete;
  HttpEngine& operator=(const HttpEngine&) = delete;

  // Binds the listening socket and returns the bound port. Throws
  // std::runtime_error if the port cannot be bound.
  int bind();
  // Serves until stop(). Requires a prior bind().
  void serve();
  // bind() then serve().
  void run();
  // Blocks until serve() is accepting connections.
  void wait_until_ready() const;
  // Stops accepting, lets in-flight requests finish, then serve() returns.
  void stop();

  int port() const noexcept;
  const PreparedServer& prepared() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lenserve
