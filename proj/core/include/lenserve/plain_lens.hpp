#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "lenserve/generate.hpp"
#include "lenserve/schema.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

// A pair of types: the one travelling forward and the one coming back.
struct Boundary {
  Schema fwd;
  Schema bwd;

  static Boundary mono(const Schema& s) { return {s, s}; }

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

Boundary operator*(const Boundary& a, const Boundary& b);

// Lens (src.fwd, src.bwd) -> (dst.fwd, dst.bwd) with
//   view   : src.fwd -> dst.fwd
//   update : src.fwd -> dst.bwd -> src.bwd
struct PlainLens {
  using View = std::function<Value(const Value&)>;
  using Update = std::function<Value(const Value&, const Value&)>;

  Boundary src;
  Boundary dst;
  View view;
  Update update;

  bool is_monomorphic() const { return src.fwd == src.bwd && dst.fwd == dst.bwd; }
};

PlainLens identity_lens(const Boundary& b);

// Monomorphic projections out of a product a * b.
PlainLens fst_lens(const Schema& a, const Schema& b);
PlainLens snd_lens(const Schema& a, const Schema& b);

// a |> b. Throws ConstructionError unless a.dst == b.src.
PlainLens compose(const PlainLens& a, const PlainLens& b);

PlainLens parallel(const PlainLens& a, const PlainLens& b);

struct Counterexample {
  Value x;
  std::optional<Value> v;  // absent for get-put, which only quantifies over x
};

struct LawReport {
  std::optional<Counterexample> put_get;
  std::optional<Counterexample> put_put;
  std::optional<Counterexample> get_put;

  bool lawful() const { return !put_get && !put_put && !get_put; }
  std::string summary() const;
};

// Sources of test inputs: whole structures x and focus values v.
struct LawInputs {
  std::function<Value(Rng&)> whole;
  std::function<Value(Rng&)> focus;

  static LawInputs from_schemas(const PlainLens& l, const GenOptions& opts = {});
};

// Samples n (x, v) pairs and reports the first violation of each law:
//   put-get  view (update x v) = v
//   put-put  update (update x v) v = update x v
//   get-put  update x (view x) = x
// Throws std::invalid_argument if l is not monomorphic.
LawReport check_laws(const PlainLens& l, const LawInputs& inputs, std::size_t n, Rng& rng);

// Exhaustive variant for lenses whose boundaries are finite; nullopt when
// either side cannot be enumerated.
std::optional<LawReport> check_laws_exhaustive(const PlainLens& l);

}  // namespace lenserve
