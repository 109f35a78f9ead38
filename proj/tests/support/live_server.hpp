#pragma once

#include <memory>
#include <string>
#include <thread>

#include <httplib.h>

#include "lenserve/engine.hpp"

namespace lenserve::testing {

// HttpEngine on an ephemeral loopback port, served from a background thread
// for the lifetime of the object.
class LiveServer {
 public:
  explicit LiveServer(const Server& server) : LiveServer(prepare(server, loopback())) {}

  explicit LiveServer(PreparedServer prepared) : engine_(std::make_unique<HttpEngine>(std::move(prepared))) {
    port_ = engine_->bind();
    thread_ = std::thread([this] { engine_->serve(); });
    engine_->wait_until_ready();
  }

  ~LiveServer() {
    engine_->stop();
    if (thread_.joinable()) thread_.join();
  }

  LiveServer(const LiveServer&) = delete;
  LiveServer& operator=(const LiveServer&) = delete;

  int port() const { return port_; }
  const PreparedServer& prepared() const { return engine_->prepared(); }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_connection_timeout(5);
    c.set_read_timeout(10);
    return c;
  }

  static EngineConfig loopback() {
    EngineConfig cfg;
    cfg.host = "127.0.0.1";
    cfg.port = 0;
    return cfg;
  }

 private:
  std::unique_ptr<HttpEngine> engine_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace lenserve::testing
