#include "lenserve/dep_lens.hpp"

#include "lenserve/errors.hpp"

namespace lenserve {

DepLens dep_identity(const Container& c) {
  return {c, c, [](const Value& v) { return v; }, [](const Value&, const Value& r) { return r; }};
}

DepLens dep_compose(const DepLens& a, const DepLens& b) {
  if (!same_boundary(a.dst, b.src)) {
    throw ConstructionError("cannot compose dependent lenses: " + a.dst.describe() + " does not match " +
                            b.src.describe());
  }
  return {a.src, b.dst, [va = a.view, vb = b.view](const Value& v) { return vb(va(v)); },
          [va = a.view, ua = a.update, ub = b.update](const Value& v, const Value& r) {
            return ua(v, ub(va(v), r));
          }};
}

DepLens dep_parallel(const DepLens& a, const DepLens& b) {
  return {tensor(a.src, b.src), tensor(a.dst, b.dst),
          [va = a.view, vb = b.view](const Value& v) { return Value::pair(va(v.first()), vb(v.second())); },
          [ua = a.update, ub = b.update](const Value& v, const Value& r) {
            return Value::pair(ua(v.first(), r.first()), ub(v.second(), r.second()));
          }};
}

DepLens embed_plain(const PlainLens& l) {
  return {Container::fixed(l.src.fwd, l.src.bwd), Container::fixed(l.dst.fwd, l.dst.bwd), l.view, l.update};
}

std::optional<ContractBreach> verify_contract(const DepLens& l, std::size_t n, Rng& rng, const GenOptions& opts) {
  for (std::size_t i = 0; i < n; ++i) {
    Value v = generate_value(l.src.shape(), rng, opts);
    Value y;
    try {
      y = l.view(v);
    } catch (const DomainError&) {
      continue;
    }
    if (!conforms(l.dst.shape(), y)) return ContractBreach{v, std::nullopt, "view left the target shape"};
    Value r = generate_value(l.dst.position(y), rng, opts);
    Value back;
    try {
      back = l.update(v, r);
    } catch (const DomainError&) {
      continue;
    }
    if (!conforms(l.src.position(v), back)) return ContractBreach{v, r, "update left the source position"};
  }
  return std::nullopt;
}

}  // namespace lenserve
