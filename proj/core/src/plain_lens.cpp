#include "lenserve/plain_lens.hpp"

#include <sstream>
#include <stdexcept>

#include "lenserve/errors.hpp"
#include "lenserve/json_codec.hpp"

namespace lenserve {

Boundary operator*(const Boundary& a, const Boundary& b) {
  return {Schema::prod(a.fwd, b.fwd), Schema::prod(a.bwd, b.bwd)};
}

PlainLens identity_lens(const Boundary& b) {
  return {b, b, [](const Value& x) { return x; }, [](const Value&, const Value& r) { return r; }};
}

PlainLens fst_lens(const Schema& a, const Schema& b) {
  Schema whole = Schema::prod(a, b);
  return {Boundary::mono(whole), Boundary::mono(a), [](const Value& x) { return x.first(); },
          [](const Value& x, const Value& v) { return Value::pair(v, x.second()); }};
}

PlainLens snd_lens(const Schema& a, const Schema& b) {
  Schema whole = Schema::prod(a, b);
  return {Boundary::mono(whole), Boundary::mono(b), [](const Value& x) { return x.second(); },
          [](const Value& x, const Value& v) { return Value::pair(x.first(), v); }};
}

PlainLens compose(const PlainLens& a, const PlainLens& b) {
  if (!(a.dst == b.src)) {
    throw ConstructionError("cannot compose lenses: right boundary (" + a.dst.fwd.to_string() + ", " +
                            a.dst.bwd.to_string() + ") does not match left boundary (" + b.src.fwd.to_string() +
                            ", " + b.src.bwd.to_string() + ")");
  }
  return {a.src, b.dst, [va = a.view, vb = b.view](const Value& x) { return vb(va(x)); },
          [va = a.view, ua = a.update, ub = b.update](const Value& x, const Value& r) {
            return ua(x, ub(va(x), r));
          }};
}

PlainLens parallel(const PlainLens& a, const PlainLens& b) {
  return {a.src * b.src, a.dst * b.dst,
          [va = a.view, vb = b.view](const Value& x) { return Value::pair(va(x.first()), vb(x.second())); },
          [ua = a.update, ub = b.update](const Value& x, const Value& r) {
            return Value::pair(ua(x.first(), r.first()), ub(x.second(), r.second()));
          }};
}

std::string LawReport::summary() const {
  std::ostringstream os;
  auto line = [&](const char* name, const std::optional<Counterexample>& c) {
    os << name << ": ";
    if (!c) {
      os << "pass\n";
      return;
    }
    os << "counterexample x=" << encode_json(c->x);
    if (c->v) os << " v=" << encode_json(*c->v);
    os << "\n";
  };
  line("put-get", put_get);
  line("put-put", put_put);
  line("get-put", get_put);
  return os.str();
}

LawInputs LawInputs::from_schemas(const PlainLens& l, const GenOptions& opts) {
  return {[s = l.src.fwd, opts](Rng& rng) { return generate_value(s, rng, opts); },
          [s = l.dst.fwd, opts](Rng& rng) { return generate_value(s, rng, opts); }};
}

namespace {

void require_monomorphic(const PlainLens& l) {
  if (!l.is_monomorphic()) throw std::invalid_argument("law checking needs a monomorphic lens");
}

void check_one(const PlainLens& l, const Value& x, const Value& v, LawReport& report) {
  if (!report.put_get || !report.put_put) {
    Value updated = l.update(x, v);
    if (!report.put_get && !(l.view(updated) == v)) report.put_get = Counterexample{x, v};
    if (!report.put_put && !(l.update(updated, v) == updated)) report.put_put = Counterexample{x, v};
  }
  if (!report.get_put && !(l.update(x, l.view(x)) == x)) report.get_put = Counterexample{x, std::nullopt};
}

}  // namespace

LawReport check_laws(const PlainLens& l, const LawInputs& inputs, std::size_t n, Rng& rng) {
  require_monomorphic(l);
  LawReport report;
  for (std::size_t i = 0; i < n && !(report.put_get && report.put_put && report.get_put); ++i) {
    Value x = inputs.whole(rng);
    Value v = inputs.focus(rng);
    check_one(l, x, v, report);
  }
  return report;
}

std::optional<LawReport> check_laws_exhaustive(const PlainLens& l) {
  require_monomorphic(l);
  auto xs = enumerate_values(l.src.fwd);
  auto vs = enumerate_values(l.dst.fwd);
  if (!xs || !vs) return std::nullopt;
  LawReport report;
  for (const auto& x : *xs)
    for (const auto& v : *vs) check_one(l, x, v, report);
  return report;
}

}  // namespace lenserve
