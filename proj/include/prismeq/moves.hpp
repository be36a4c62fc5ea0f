#pragma once

#include <optional>

#include "prismeq/patterns.hpp"

namespace prismeq {

// Executes the recoloring move of the named configuration at a matched
// placement.  Candidate recolorings follow each lemma's cascade; every
// candidate is validated (proper, list-respecting, strictly smaller word)
// and the first valid one is returned.  nullopt = NotApplicable (no candidate
// satisfies the success criterion, e.g. the coloring is already lex-min).
std::optional<Coloring> apply_move(const Prism& p, const ListAssignment& L, const Coloring& c,
                                   const Placement& placement, const Pattern& pat);

struct ConfigHit {
    std::string config;
    Placement placement;
    Coloring improved;
};

// Placements where a configuration matches AND its move applies, i.e. the
// coloring is improvable.  Exact lex-min colorings produce an empty report.
std::vector<ConfigHit> assert_config_free(const Prism& p, const Coloring& c,
                                          const ListAssignment& L,
                                          const std::vector<Pattern>& configs);

}  // namespace prismeq
