#include "lenserve/server.hpp"

#include "lenserve/errors.hpp"
#include "lenserve/state.hpp"

namespace lenserve {

Server::Server(Container left, Container param, Container right, DepLens::View view, DepLens::Update update)
    : left_(std::move(left)),
      param_(std::move(param)),
      right_(std::move(right)),
      lens_{tensor(left_, param_), right_, std::move(view), std::move(update)} {}

Server Server::from_lens(Container left, Container param, DepLens lens) {
  Container expected = tensor(left, param);
  if (!same_boundary(lens.src, expected)) {
    throw ConstructionError("lens source " + lens.src.describe() + " is not " + expected.describe());
  }
  Container right = lens.dst;
  return Server(std::move(left), std::move(param), std::move(right), std::move(lens.view), std::move(lens.update));
}

namespace {

void require_same(const Container& a, const Container& b, const char* what) {
  if (!same_boundary(a, b)) {
    throw ConstructionError(std::string(what) + ": " + a.describe() + " does not match " + b.describe());
  }
}

// Left shape Lit seg * X with positions taken from X.
Container prefixed(const Schema& head, const Container& inner) {
  Schema shape = Schema::prod(head, inner.shape());
  if (inner.kind() == ContainerKind::Const || inner.kind() == ContainerKind::Fixed) {
    return Container::fixed(shape, inner.fixed_position());
  }
  return Container::custom(head.to_string() + " / " + inner.describe(), shape,
                           [inner](const Value& v) { return inner.position(v.second()); });
}

}  // namespace

Server reparam(const Server& s, const DepLens& l) {
  require_same(l.dst, s.param(), "reparam");
  auto view = [sv = s.lens().view, pv = l.view](const Value& xy) {
    return sv(Value::pair(xy.first(), pv(xy.second())));
  };
  auto update = [su = s.lens().update, pv = l.view, pu = l.update](const Value& xy, const Value& r) {
    const Value& y = xy.second();
    Value back = su(Value::pair(xy.first(), pv(y)), r);
    return Value::pair(back.first(), pu(y, back.second()));
  };
  return Server(s.left(), l.src, s.right(), view, update);
}

Server seq(const Server& a, const Server& b) {
  require_same(a.right(), b.left(), "sequential composition");
  // request (x, (p, q)): a runs on (x, p), b on (a's output, q)
  auto view = [va = a.lens().view, vb = b.lens().view](const Value& in) {
    const Value& x = in.first();
    const Value& pq = in.second();
    return vb(Value::pair(va(Value::pair(x, pq.first())), pq.second()));
  };
  auto update = [va = a.lens().view, ua = a.lens().update, ub = b.lens().update](const Value& in, const Value& arg) {
    Value xp = Value::pair(in.first(), in.second().first());
    Value from_b = ub(Value::pair(va(xp), in.second().second()), arg);
    Value from_a = ua(xp, from_b.first());
    return Value::pair(from_a.first(), Value::pair(from_a.second(), from_b.second()));
  };
  return Server(a.left(), tensor(a.param(), b.param()), b.right(), view, update);
}

Server pre_compose(const DepLens& l, const Server& s) {
  require_same(l.dst, s.left(), "pre-composition");
  auto view = [lv = l.view, sv = s.lens().view](const Value& xp) {
    return sv(Value::pair(lv(xp.first()), xp.second()));
  };
  auto update = [lv = l.view, lu = l.update, su = s.lens().update](const Value& xp, const Value& r) {
    const Value& x = xp.first();
    Value back = su(Value::pair(lv(x), xp.second()), r);
    return Value::pair(lu(x, back.first()), back.second());
  };
  return Server(l.src, s.param(), s.right(), view, update);
}

Server post_compose(const Server& s, const DepLens& l) {
  require_same(s.right(), l.src, "post-composition");
  auto view = [sv = s.lens().view, lv = l.view](const Value& xp) { return lv(sv(xp)); };
  auto update = [sv = s.lens().view, su = s.lens().update, lu = l.update](const Value& xp, const Value& r) {
    return su(xp, lu(sv(xp), r));
  };
  return Server(s.left(), s.param(), l.dst, view, update);
}

Server parallel(const Server& a, const Server& b) {
  Container outer_left = tensor(a.left(), b.left());
  Container outer_param = tensor(a.param(), b.param());
  Container inner = tensor(tensor(a.left(), a.param()), tensor(b.left(), b.param()));
  // ((a, x), (p, q)) -> ((a, p), (x, q)) on shapes, and back on positions
  auto reassoc = [](const Value& v) {
    return Value::pair(Value::pair(v.first().first(), v.second().first()),
                       Value::pair(v.first().second(), v.second().second()));
  };
  DepLens adapter{tensor(outer_left, outer_param), inner, reassoc,
                  [reassoc](const Value&, const Value& r) { return reassoc(r); }};
  DepLens both = dep_compose(adapter, dep_parallel(a.lens(), b.lens()));
  return Server::from_lens(outer_left, outer_param, both);
}

Server ext_choice(const Server& a, const Server& b) {
  auto view = [va = a.lens().view, vb = b.lens().view](const Value& in) {
    const Value& choice = in.first();
    const Value& pq = in.second();
    if (choice.is(ValueKind::Inl)) return Value::inl(va(Value::pair(choice.payload(), pq.first())));
    return Value::inr(vb(Value::pair(choice.payload(), pq.second())));
  };
  auto update = [ua = a.lens().update, ub = b.lens().update](const Value& in, const Value& r) {
    const Value& choice = in.first();
    const Value& pq = in.second();
    if (choice.is(ValueKind::Inl)) {
      Value back = ua(Value::pair(choice.payload(), pq.first()), r);
      return Value::pair(back.first(), Value::inl(back.second()));
    }
    Value back = ub(Value::pair(choice.payload(), pq.second()), r);
    return Value::pair(back.first(), Value::inr(back.second()));
  };
  return Server(a.left() + b.left(), a.param() * b.param(), a.right() + b.right(), view, update);
}

Server clone_choice(const Server& a, const Server& b) {
  require_same(a.param(), b.param(), "clone choice needs one shared parameter");
  auto view = [va = a.lens().view, vb = b.lens().view](const Value& in) {
    const Value& choice = in.first();
    if (choice.is(ValueKind::Inl)) return Value::inl(va(Value::pair(choice.payload(), in.second())));
    return Value::inr(vb(Value::pair(choice.payload(), in.second())));
  };
  auto update = [ua = a.lens().update, ub = b.lens().update](const Value& in, const Value& r) {
    const Value& choice = in.first();
    Value xp = Value::pair(choice.payload(), in.second());
    return choice.is(ValueKind::Inl) ? ua(xp, r) : ub(xp, r);
  };
  return Server(a.left() + b.left(), a.param(), a.right() + b.right(), view, update);
}

DepLens dup_dia(const Container& p) {
  return {p, p * p, [](const Value& v) { return Value::pair(v, v); },
          [](const Value&, const Value& d) { return d.payload(); }};
}

Server to_server(const DepLens& l) {
  auto view = [lv = l.view](const Value& xp) { return lv(xp.first()); };
  auto update = [lu = l.update](const Value& xp, const Value& r) {
    return Value::pair(lu(xp.first(), r), Value::unit());
  };
  return Server(l.src, Container::constant(Schema::unit()), l.dst, view, update);
}

Server state_server(const Container& c) {
  return Server(Container::constant(Schema::unit()), c, c, [](const Value& xp) { return xp.second(); },
                [](const Value&, const Value& r) { return Value::pair(Value::unit(), r); });
}

Server get_lens(const Schema& uri, const Container& state, const Schema& response, GetHandler handler) {
  if (!has_stationary_diff(state)) {
    throw ConstructionError("GET endpoint needs a state whose diffs can express 'unchanged': " + state.describe());
  }
  auto view = [handler = std::move(handler)](const Value& xp) { return handler(xp.second(), xp.first()); };
  auto update = [state](const Value& xp, const Value&) {
    return Value::pair(Value::unit(), *stationary_diff(state, xp.second()));
  };
  return Server(Container::unit_positions(uri), state, Container::unit_positions(response), view, update);
}

Server post_lens(const Schema& uri, const Container& state, const Schema& body, PostHandler handler) {
  if (state.kind() != ContainerKind::Const) {
    throw ConstructionError("POST endpoint needs a Const state, got " + state.describe());
  }
  auto view = [](const Value&) { return Value::unit(); };
  auto update = [handler = std::move(handler)](const Value& xp, const Value& b) {
    return Value::pair(Value::unit(), handler(xp.second(), xp.first(), b));
  };
  return Server(Container::unit_positions(uri), state, Container::fixed(Schema::unit(), body), view, update);
}

DepLens path_adapter(const std::string& seg, const Container& inner) {
  return {prefixed(Schema::lit(seg), inner), inner, [](const Value& v) { return v.second(); },
          [](const Value&, const Value& r) { return r; }};
}

Server path_prefix(const std::string& seg, const Server& s) {
  Schema head = [&] {
    try {
      return Schema::lit(seg);
    } catch (const std::invalid_argument& ex) {
      throw ConstructionError(ex.what());
    }
  }();
  return pre_compose(path_adapter(head.literal(), s.left()), s);
}

Server capture_prefix(const Schema& cap, const Server& s) {
  switch (cap.kind()) {
    case SchemaKind::Int:
    case SchemaKind::Nat:
    case SchemaKind::Text:
    case SchemaKind::Bool: break;
    default: throw ConstructionError("cannot capture a URI segment of type " + cap.to_string());
  }
  auto view = [sv = s.lens().view](const Value& in) {
    const Value& cx = in.first();
    return Value::pair(cx.first(), sv(Value::pair(cx.second(), in.second())));
  };
  auto update = [su = s.lens().update](const Value& in, const Value& r) {
    return su(Value::pair(in.first().second(), in.second()), r);
  };
  return Server(prefixed(cap, s.left()), s.param(), prefixed(cap, s.right()), view, update);
}

}  // namespace lenserve
