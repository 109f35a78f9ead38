#include "lenserve/engine.hpp"

#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"

namespace lenserve {

namespace {

HttpResponse error_response(int status, const std::string& message) {
  return {status, nlohmann::json{{"error", message}}.dump(), "application/json"};
}

HttpResponse ok(const std::string& body) { return {200, body, "application/json"}; }

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

void EngineConfig::validate() const {
  if (port < 0 || port > 65535) throw ConfigurationError("port out of range: " + std::to_string(port));
  if (max_body_bytes == 0) throw ConfigurationError("max body size must be positive");
}

PreparedServer prepare(const Server& server, const EngineConfig& cfg) {
  return prepare(server, cfg, default_value(server.param().shape()));
}

PreparedServer prepare(const Server& server, const EngineConfig& cfg, Value initial) {
  cfg.validate();
  if (!is_uri_parsable(server.left().shape())) {
    throw ConfigurationError("request boundary " + server.left().describe() + " has no URI grammar");
  }
  PreparedServer p;
  p.server_ = std::make_shared<const Server>(server);
  p.uri_ = std::make_shared<const UriParser>(uri_parser(server.left().shape()));
  p.cell_ = std::make_shared<StateCell>(derive_action(server.param()), std::move(initial));
  p.config_ = std::make_shared<const EngineConfig>(cfg);
  return p;
}

HttpResponse PreparedServer::handle_get(std::string_view path) const {
  auto x = parse_uri(*uri_, path);
  if (!x) return error_response(404, "no route for " + std::string(path));
  try {
    Value y = server_->view(*x, cell_->snapshot());
    return ok(encode_response(server_->right(), y));
  } catch (const DomainError& ex) {
    return error_response(400, ex.what());
  } catch (const std::exception& ex) {
    return error_response(500, ex.what());
  }
}

HttpResponse PreparedServer::handle_post(std::string_view path, std::string_view body) const {
  auto x = parse_uri(*uri_, path);
  if (!x) return error_response(404, "no route for " + std::string(path));
  std::string_view text = blank(body) ? std::string_view("null") : body;
  try {
    Value response = cell_->transact([&](const Value& state) {
      Value y = server_->view(*x, state);
      Value r = deserialize_body(server_->right().position(y), text);
      Value back = server_->update(*x, state, r);
      if (!conforms(server_->left().position(*x), back.first())) {
        throw ContractViolation("POST response does not conform to " + server_->left().position(*x).to_string());
      }
      return std::pair<Value, Value>(back.first(), back.second());
    });
    return ok(encode_json(response));
  } catch (const DecodeError& ex) {
    return error_response(400, ex.what());
  } catch (const DomainError& ex) {
    return error_response(400, ex.what());
  } catch (const std::exception& ex) {
    return error_response(500, ex.what());
  }
}

struct HttpEngine::Impl {
  explicit Impl(PreparedServer p) : prepared(std::move(p)) {}

  PreparedServer prepared;
  httplib::Server http;
  int port = -1;
  std::mutex log_mutex;
};

namespace {

thread_local std::chrono::steady_clock::time_point request_start;

std::string request_path(const httplib::Request& req) {
  std::string target = req.target;
  if (auto q = target.find('?'); q != std::string::npos) target.erase(q);
  return target;
}

void send(httplib::Response& res, const HttpResponse& out) {
  res.status = out.status;
  if (!out.body.empty()) res.set_content(out.body, out.content_type);
}

}  // namespace

HttpEngine::HttpEngine(PreparedServer prepared) : impl_(std::make_unique<Impl>(std::move(prepared))) {
  auto& http = impl_->http;
  const auto& cfg = impl_->prepared.config();

  http.new_task_queue = [] { return new httplib::ThreadPool(16); };
  http.set_payload_max_length(cfg.max_body_bytes);
  // SO_REUSEADDR only: the library default (SO_REUSEPORT) lets a second
  // process bind the same port and split the traffic.
  http.set_socket_options([](int sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });

  http.set_pre_routing_handler([](const httplib::Request&, httplib::Response&) {
    request_start = std::chrono::steady_clock::now();
    return httplib::Server::HandlerResponse::Unhandled;
  });

  Impl* impl = impl_.get();
  http.Get(".*", [impl](const httplib::Request& req, httplib::Response& res) {
    send(res, impl->prepared.handle_get(request_path(req)));
  });
  http.Post(".*", [impl](const httplib::Request& req, httplib::Response& res) {
    send(res, impl->prepared.handle_post(request_path(req), req.body));
  });
  auto not_allowed = [](const httplib::Request& req, httplib::Response& res) {
    send(res, error_response(405, "method " + req.method + " not allowed"));
    res.set_header("Allow", "GET, POST");
  };
  http.Put(".*", not_allowed);
  http.Delete(".*", not_allowed);
  http.Patch(".*", not_allowed);
  http.Options(".*", not_allowed);

  if (cfg.log) {
    http.set_logger([impl](const httplib::Request& req, const httplib::Response& res) {
      auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - request_start);
      std::ostringstream line;
      line << req.method << ' ' << request_path(req) << ' ' << res.status << ' ' << elapsed.count() << "ms";
      std::lock_guard lock(impl->log_mutex);
      impl->prepared.config().log(line.str());
    });
  }
}

HttpEngine::~HttpEngine() { stop(); }

int HttpEngine::bind() {
  const auto& cfg = impl_->prepared.config();
  if (cfg.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(cfg.host);
  } else if (impl_->http.bind_to_port(cfg.host, cfg.port)) {
    impl_->port = cfg.port;
  }
  if (impl_->port <= 0) {
    throw std::runtime_error("cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
  }
  return impl_->port;
}

void HttpEngine::serve() {
  if (impl_->port <= 0) throw std::logic_error("serve() before bind()");
  impl_->http.listen_after_bind();
}

void HttpEngine::run() {
  bind();
  serve();
}

void HttpEngine::wait_until_ready() const { impl_->http.wait_until_ready(); }

void HttpEngine::stop() {
  if (impl_) impl_->http.stop();
}

int HttpEngine::port() const noexcept { return impl_->port; }

const PreparedServer& HttpEngine::prepared() const noexcept { return impl_->prepared; }

}  // namespace lenserve
