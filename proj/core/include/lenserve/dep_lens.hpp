#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "lenserve/container.hpp"
#include "lenserve/generate.hpp"
#include "lenserve/plain_lens.hpp"

namespace lenserve {

// Container morphism src -> dst:
//   view   : src.shape -> dst.shape
//   update : (v : src.shape) -> dst.position (view v) -> src.position v
struct DepLens {
  using View = std::function<Value(const Value&)>;
  using Update = std::function<Value(const Value&, const Value&)>;

  Container src;
  Container dst;
  View view;
  Update update;
};

DepLens dep_identity(const Container& c);

// view = b.view . a.view; update v r = a.update v (b.update (a.view v) r).
// Throws ConstructionError unless a.dst and b.src agree.
DepLens dep_compose(const DepLens& a, const DepLens& b);

// Boundaries tensored; view and update act componentwise on pairs.
DepLens dep_parallel(const DepLens& a, const DepLens& b);

// A plain lens (X, S) -> (Y, R) as a morphism MkCont X (const S) -> MkCont Y (const R).
DepLens embed_plain(const PlainLens& l);

struct ContractBreach {
  Value shape_value;
  std::optional<Value> position_value;
  std::string what;
};

// Samples n shape values v of l.src and a position r over view v for each,
// checking that view v lands in dst.shape and update v r in src.position v.
std::optional<ContractBreach> verify_contract(const DepLens& l, std::size_t n, Rng& rng,
                                              const GenOptions& opts = {});

}  // namespace lenserve
