#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "freegb/letterplace.hpp"
#include "freegb/ordering.hpp"

namespace freegb {

struct EngineConfig {
  // Highest place an S-pair's lcm may occupy; pairs past it are skipped and
  // the run is flagged truncated.
  std::size_t weight_bound = 0;
  Variant variant = Variant::std;
  bool minimalize = true;
  bool tail_reduce = true;
  bool trace = false;
  std::ostream* trace_out = nullptr;
};

struct RunStats {
  std::size_t pairs_reduced = 0;
  std::size_t saturations = 0;
  // Generator-derived start entries before reduction (shifted copies count
  // once each under Variant::bas).
  std::size_t seeds = 0;
  std::size_t basis_count = 0;
  // Largest degree in the minimal basis, -1 when it is empty.
  int max_degree = -1;
};

struct GBResult {
  std::vector<FreePoly> basis;
  std::vector<FreePoly> minimal_basis;
  bool certified_complete = false;
  bool truncated = false;
  RunStats stats;
};

// Two-sided Groebner basis of the ideal generated by gens, computed through
// the padding letter: generators are padded to uniform degree, the loop runs
// on their place encodings alongside the padding commutators, and remainders
// are saturated before insertion. Throws inconsistent_ideal when the ideal
// turns out to contain a nonzero scalar, and std::invalid_argument when the
// weight bound cannot fit a generator.
GBResult groebner_basis(const std::vector<FreePoly>& gens, const Alphabet& ab,
                        Order order, const EngineConfig& cfg);

// Same loop for generators that are already homogeneous: no padding letter,
// no commutators, no saturation. Throws std::invalid_argument when a
// generator is not homogeneous.
GBResult homogeneous_groebner_basis(const std::vector<FreePoly>& gens,
                                    const Alphabet& ab, Order order,
                                    const EngineConfig& cfg);

// Whether a weight bound is large enough to promote a degree-bounded run
// into a full Groebner basis: every unexamined pair of minimal-basis
// elements of degree <= max_degree has its lcm within 2*max_degree - 1
// places.
bool certified_complete(int max_degree, std::size_t weight_bound);

// Exhaustive recheck used by the test-suite: re-encodes basis, then reduces
// every admissible S-polynomial within the weight bound and reports whether
// all of them vanish.
bool verify_completion(const std::vector<FreePoly>& basis, const Alphabet& ab,
                       Order order, std::size_t weight_bound);

}  // namespace freegb
