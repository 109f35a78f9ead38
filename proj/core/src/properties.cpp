#include "lenserve/properties.hpp"

#include <functional>
#include <sstream>

#include "lenserve/demos.hpp"
#include "lenserve/dep_lens.hpp"
#include "lenserve/engine.hpp"
#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"
#include "lenserve/routing.hpp"
#include "lenserve/server.hpp"

namespace lenserve {

PlainLens append_lens() {
  Schema list = Schema::list(Schema::boolean());
  return {Boundary::mono(list), Boundary::mono(Schema::boolean()), [](const Value& x) { return x.items().back(); },
          [](const Value& x, const Value& v) {
            auto items = x.items();
            items.push_back(v);
            return Value::list(std::move(items));
          }};
}

LawInputs append_lens_inputs() {
  return {[](Rng& rng) {
            std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
            std::vector<Value> items;
            for (std::size_t i = 0; i < n; ++i) items.push_back(Value::boolean(std::bernoulli_distribution(0.5)(rng)));
            return Value::list(std::move(items));
          },
          [](Rng& rng) { return Value::boolean(std::bernoulli_distribution(0.5)(rng)); }};
}

namespace {

PlainLens swap_lens(const Schema& a, const Schema& b) {
  return {Boundary::mono(Schema::prod(a, b)), Boundary::mono(Schema::prod(b, a)),
          [](const Value& x) { return Value::pair(x.second(), x.first()); },
          [](const Value&, const Value& v) { return Value::pair(v.second(), v.first()); }};
}

PlainLens negation_lens() {
  return {Boundary::mono(Schema::boolean()), Boundary::mono(Schema::boolean()),
          [](const Value& x) { return Value::boolean(!x.as_bool()); },
          [](const Value&, const Value& v) { return Value::boolean(!v.as_bool()); }};
}

PlainLens minus_lens() {
  return {Boundary::mono(Schema::integer()), Boundary::mono(Schema::integer()),
          [](const Value& x) { return Value::integer(-x.as_int()); },
          [](const Value&, const Value& v) { return Value::integer(-v.as_int()); }};
}

}  // namespace

PlainLens random_lawful_lens(const Schema& s, Rng& rng) {
  std::vector<std::function<PlainLens()>> options{[&] { return identity_lens(Boundary::mono(s)); }};
  if (s.is(SchemaKind::Prod)) {
    options.emplace_back([&] { return fst_lens(s.left(), s.right()); });
    options.emplace_back([&] { return snd_lens(s.left(), s.right()); });
    options.emplace_back([&] { return swap_lens(s.left(), s.right()); });
  }
  if (s.is(SchemaKind::Bool)) options.emplace_back(negation_lens);
  if (s.is(SchemaKind::Int)) options.emplace_back(minus_lens);
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]();
}

namespace {

PropertyResult lawful(const std::string& name, const PlainLens& l, std::size_t n, Rng& rng) {
  LawReport report = check_laws(l, LawInputs::from_schemas(l), n, rng);
  return {name, report.lawful(), report.lawful() ? "" : report.summary()};
}

std::string show(const Value& v) { return encode_json(v); }

PropertyResult ext_choice_isolation(std::size_t n, Rng& rng) {
  Server a = demos::todo();
  Server b = demos::iot();
  Server both = ext_choice(a, b);
  for (std::size_t i = 0; i < n; ++i) {
    bool left = std::bernoulli_distribution(0.5)(rng);
    const Server& side = left ? a : b;
    Value x = generate_value(side.left().shape(), rng);
    Value p = generate_value(a.param().shape(), rng);
    Value q = generate_value(b.param().shape(), rng);
    Value p2 = generate_value(a.param().shape(), rng);
    Value q2 = generate_value(b.param().shape(), rng);
    Value own = left ? p : q;
    Value r = generate_value(side.right().position(side.view(x, own)), rng);
    Value choice = left ? Value::inl(x) : Value::inr(x);
    Value one = both.update(choice, Value::pair(p, q), r);
    Value other = left ? both.update(choice, Value::pair(p, q2), r) : both.update(choice, Value::pair(p2, q), r);
    if (!(one == other)) {
      return {"ext_choice backward ignores the other state", false, "request " + show(choice)};
    }
  }
  return {"ext_choice backward ignores the other state", true, ""};
}

PropertyResult clone_is_reparam(std::size_t n, Rng& rng) {
  Server a = post_compose(path_prefix("1", state_server(Container::constant(demos::home_state()))),
                          embed_plain(fst_lens(Schema::boolean(), Schema::prod(Schema::boolean(), Schema::boolean()))));
  Server b = demos::iot();
  Server fused = clone_choice(a, b);
  Server rewired = reparam(ext_choice(a, b), dup_dia(a.param()));
  for (std::size_t i = 0; i < n; ++i) {
    Value x = generate_value(fused.left().shape(), rng);
    Value p = generate_value(fused.param().shape(), rng);
    Value y = fused.view(x, p);
    if (!(y == rewired.view(x, p))) return {"clone_choice equals reparam of ext_choice", false, "view at " + show(x)};
    Value r = generate_value(fused.right().position(y), rng);
    if (!(fused.update(x, p, r) == rewired.update(x, p, r))) {
      return {"clone_choice equals reparam of ext_choice", false, "update at " + show(x)};
    }
  }
  return {"clone_choice equals reparam of ext_choice", true, ""};
}

PropertyResult law_stability(std::size_t pairs, std::size_t n, Rng& rng) {
  for (std::size_t i = 0; i < pairs; ++i) {
    Schema s = generate_schema(rng, {3, false, false});
    PlainLens a = random_lawful_lens(s, rng);
    PlainLens b = random_lawful_lens(a.dst.fwd, rng);
    PlainLens ab = compose(a, b);
    LawReport report = check_laws(ab, LawInputs::from_schemas(ab), n, rng);
    if (!report.lawful()) return {"compositions of lawful lenses are lawful", false, report.summary()};
  }
  return {"compositions of lawful lenses are lawful", true, ""};
}

PropertyResult contracts(std::size_t n, Rng& rng) {
  for (auto d : {demos::Demo::Calculator, demos::Demo::Iot, demos::Demo::Todo, demos::Demo::Combined}) {
    Server s = demos::build(d);
    if (auto breach = verify_contract(s.lens(), n, rng)) {
      return {"demo servers honour their typing contract", false,
              std::string(demos::demo_name(d)) + ": " + breach->what + " at " + show(breach->shape_value)};
    }
  }
  return {"demo servers honour their typing contract", true, ""};
}

PropertyResult codec_round_trip(std::size_t n, Rng& rng) {
  for (std::size_t i = 0; i < n; ++i) {
    Schema s = generate_schema(rng);
    Value v = generate_value(s, rng);
    Value back = decode_json(s, encode_json(v));
    if (!(back == v)) return {"JSON decode inverts encode", false, s.to_string() + " " + show(v)};
  }
  return {"JSON decode inverts encode", true, ""};
}

PropertyResult uri_round_trip(std::size_t n, Rng& rng) {
  GenOptions opts;
  opts.non_empty_text = true;
  for (std::size_t i = 0; i < n; ++i) {
    Schema s = generate_uri_schema(rng, 4, true);
    Value v = generate_value(s, rng, opts);
    auto back = parse_uri(s, render_uri(s, v));
    if (!back || !(*back == v)) return {"URI parse inverts render", false, s.to_string() + " " + show(v)};
  }
  return {"URI parse inverts render", true, ""};
}

PropertyResult get_purity(std::size_t n, Rng& rng) {
  GenOptions opts;
  opts.non_empty_text = true;
  for (auto d : {demos::Demo::Calculator, demos::Demo::Iot, demos::Demo::Todo, demos::Demo::Combined}) {
    PreparedServer p = prepare(demos::build(d));
    // seed some state first so reads have something to observe
    for (std::size_t i = 0; i < 10; ++i) {
      Value x = generate_value(p.server().left().shape(), rng, opts);
      try {
        Value y = p.server().view(x, p.state().snapshot());
        Value body = generate_value(p.server().right().position(y), rng, opts);
        p.handle_post(render_uri(p.server().left().shape(), x), encode_json(body));
      } catch (const DomainError&) {
      }
    }
    std::string before = encode_json(p.state().snapshot());
    for (std::size_t i = 0; i < n; ++i) {
      Value x = generate_value(p.server().left().shape(), rng, opts);
      p.handle_get(render_uri(p.server().left().shape(), x));
    }
    if (encode_json(p.state().snapshot()) != before) {
      return {"GET never changes the state", false, std::string(demos::demo_name(d))};
    }
  }
  return {"GET never changes the state", true, ""};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  const Schema b = Schema::boolean();
  const Schema i = Schema::integer();
  out.push_back(lawful("fst lens is lawful", fst_lens(i, b), samples, rng));
  out.push_back(lawful("snd lens is lawful", snd_lens(i, b), samples, rng));
  out.push_back(lawful("identity lens is lawful", identity_lens(Boundary::mono(demos::user_schema())), samples, rng));
  out.push_back(lawful("user |> street number is lawful",
                       compose(demos::user_address_lens(), demos::street_number_lens()), samples, rng));
  {
    LawReport report = check_laws(append_lens(), append_lens_inputs(), samples, rng);
    out.push_back({"append lens breaks put-put", report.put_put.has_value(),
                   report.put_put ? "" : "no put-put counterexample found"});
  }
  out.push_back(law_stability(20, samples, rng));
  out.push_back(ext_choice_isolation(samples / 2, rng));
  out.push_back(clone_is_reparam(samples, rng));
  out.push_back(contracts(samples, rng));
  out.push_back(codec_round_trip(samples, rng));
  out.push_back(uri_round_trip(samples, rng));
  out.push_back(get_purity(100, rng));
  return out;
}

}  // namespace lenserve
