#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lenserve/plain_lens.hpp"

namespace lenserve {

// Deliberately unlawful: update appends the focus to a non-empty Bool list,
// view reads the last element.
PlainLens append_lens();
// Generator of non-empty Bool lists for append_lens.
LawInputs append_lens_inputs();

// Random lawful lens out of s built from identities, projections, swaps and
// negations; its target is a sub-structure of s.
PlainLens random_lawful_lens(const Schema& s, Rng& rng);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the algebraic property suite over the shipped lenses, the server
// combinators and the demo servers. samples is the per-property case count.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t samples = 1000);

}  // namespace lenserve
