#pragma once

#include <optional>

#include "prismeq/coloring.hpp"
#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

// Exhaustive recoloring of the 2w vertices inside some w-rung window with
// boundary colors fixed; returns a best strictly word-smaller proper
// list-respecting coloring, or nullopt if no window admits one.  Subsumes
// every configuration move (each lemma recolors <= 5 vertices inside <= 7
// consecutive rungs).
std::optional<Coloring> window_improve(const Prism& p, const ListAssignment& L, const Coloring& c,
                                       int w);

// Same search restricted to one window, given as a rung set.
std::optional<Coloring> window_improve_at(const Prism& p, const ListAssignment& L,
                                          const Coloring& c, const std::vector<int>& rungs);

// Fixed point of window_improve for all widths <= w_max.  Inexact: a width-w
// local minimum need not be globally lex-min.
Coloring improve_to_local_min(const Prism& p, const ListAssignment& L, const Coloring& c,
                              int w_max);

}  // namespace prismeq
