#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "lenserve/container.hpp"
#include "lenserve/dep_lens.hpp"
#include "lenserve/plain_lens.hpp"

namespace lenserve {

// A dependent parametrised lens: left (x) param -> right.
//
// The left boundary is the request side (shapes are URIs, positions are POST
// responses), the right boundary the resource side (shapes are GET responses,
// positions are POST bodies) and the parameter is the server state (shapes are
// states, positions are state diffs).
class Server {
 public:
  Server(Container left, Container param, Container right, DepLens::View view, DepLens::Update update);

  // Wraps an existing lens whose source must agree with left (x) param.
  static Server from_lens(Container left, Container param, DepLens lens);

  const Container& left() const noexcept { return left_; }
  const Container& param() const noexcept { return param_; }
  const Container& right() const noexcept { return right_; }
  const DepLens& lens() const noexcept { return lens_; }

  // Forward pass: the GET response for request x at state p.
  Value view(const Value& x, const Value& p) const { return lens_.view(Value::pair(x, p)); }
  // Backward pass: Pair(response, state diff) for request x, state p, body r.
  Value update(const Value& x, const Value& p, const Value& r) const { return lens_.update(Value::pair(x, p), r); }

 private:
  Container left_;
  Container param_;
  Container right_;
  DepLens lens_;
};

// Rewires the parameter through l : p' -> p.
Server reparam(const Server& s, const DepLens& l);

// a |> b. Parameters are tensored: p (x) q.
Server seq(const Server& a, const Server& b);

// l <<< s: pre-processes requests through l.
Server pre_compose(const DepLens& l, const Server& s);

// s >>> l: post-processes responses through l.
Server post_compose(const Server& s, const DepLens& l);

Server parallel(const Server& a, const Server& b);

// +&&&+ : client picks a side, states multiply (p * q).
Server ext_choice(const Server& a, const Server& b);

// &&& : client picks a side, both sides share one state.
// Throws ConstructionError when the two parameters differ.
Server clone_choice(const Server& a, const Server& b);

// dup on shapes, codiagonal on positions: p -> p * p.
DepLens dup_dia(const Container& p);

// Embeds a lens as a server with a unit parameter.
Server to_server(const DepLens& l);

// Exposes the parameter as the resource: view reads the state, update writes
// the posted position as the state diff.
Server state_server(const Container& c);

using GetHandler = std::function<Value(const Value& state, const Value& uri)>;
using PostHandler = std::function<Value(const Value& state, const Value& uri, const Value& body)>;

// Read-only endpoint. Handlers may throw DomainError. POSTing to it takes a
// null body, answers null and leaves the state alone.
Server get_lens(const Schema& uri, const Container& state, const Schema& response, GetHandler handler);

// Write endpoint over a Const state; the handler returns the replacement state.
// GET on it answers null.
Server post_lens(const Schema& uri, const Container& state, const Schema& body, PostHandler handler);

// The pi2 adapter Lit seg * X -> X used by path_prefix.
DepLens path_adapter(const std::string& seg, const Container& inner);

// seg / s. seg must be a valid literal segment.
Server path_prefix(const std::string& seg, const Server& s);

// cap :/ s. Captures the segment and echoes it next to the inner response.
// cap must be Int, Nat, Text or Bool.
Server capture_prefix(const Schema& cap, const Server& s);

namespace dsl {

struct Capture {
  Schema schema;
};
inline Capture capture(Schema s) { return {std::move(s)}; }

inline Server operator/(std::string_view seg, const Server& s) { return path_prefix(std::string(seg), s); }
inline Server operator/(const Capture& c, const Server& s) { return capture_prefix(c.schema, s); }
inline Server operator&(const Server& a, const Server& b) { return clone_choice(a, b); }
inline Server operator+(const Server& a, const Server& b) { return ext_choice(a, b); }
inline Server operator|(const Server& a, const Server& b) { return seq(a, b); }
inline Server operator>>(const Server& s, const DepLens& l) { return post_compose(s, l); }
inline Server operator>>(const Server& s, const PlainLens& l) { return post_compose(s, embed_plain(l)); }
inline Server operator<<(const DepLens& l, const Server& s) { return pre_compose(l, s); }

}  // namespace dsl

}  // namespace lenserve
