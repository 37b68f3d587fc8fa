#pragma once

#include <cstddef>
#include <vector>

#include "freegb/freepoly.hpp"

namespace freegb::oracle {

// Independent word-level completion used to cross-check the place-encoded
// engine: overlap and containment ambiguities are resolved smallest word
// first, anything past degree_bound is skipped, and remainders join the
// basis until the queue drains. Returns the minimal tail-reduced monic basis
// in descending lead order. Throws inconsistent_ideal when a scalar falls
// into the ideal and std::invalid_argument when a generator does not fit the
// bound.
std::vector<FreePoly> groebner_basis(const std::vector<FreePoly>& gens,
                                     Order order, std::size_t degree_bound);

}  // namespace freegb::oracle
