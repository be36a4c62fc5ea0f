#pragma once

#include <cstdint>
#include <string>

#include "prismeq/moves.hpp"

namespace prismeq {

// A randomized planted occurrence of a configuration, satisfying the lemma
// hypotheses of its source proof (class-size gaps, properness, 3-uniform
// lists containing the current colors).  The placement locates the plant.
struct Fixture {
    Prism prism;
    ListAssignment lists;
    Coloring coloring;
    Placement placement;
    std::string config;
};

// Supported configs: F1..F8, P4C1..P4C5.  Deterministic per (config, seed).
Fixture make_fixture(const std::string& config, uint64_t seed);

// The adversarial 2-list assignment for even n: the frozen transcription of
// the failed-coloring gadget embedded in rungs 0..3 (b=0, g=1, r=2), every
// other vertex assigned {0,1}.
ListAssignment even_unsat_assignment(const Prism& p);

// A random proper coloring (not list-constrained): greedy with retries over a
// small palette, optionally biased toward a heavy color class.
Coloring random_proper_coloring(const Prism& p, uint64_t seed, int palette = 5,
                                bool heavy_first_color = false);

}  // namespace prismeq
