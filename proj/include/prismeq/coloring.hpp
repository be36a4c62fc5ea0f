#pragma once

#include <map>
#include <vector>

#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"
#include "prismeq/symmetry.hpp"

namespace prismeq {

// Total vertex coloring.  Properness and list-respect are checkable
// predicates, not construction-time requirements; reduction fixtures need to
// pass improper intermediates through the checks.
struct Coloring {
    std::vector<int> color;  // indexed by vertex id

    bool operator==(const Coloring&) const = default;
};

bool is_proper(const Prism& p, const Coloring& c);
bool respects_lists(const ListAssignment& L, const Coloring& c);

// class sizes keyed by color
std::map<int, int> class_sizes(const Coloring& c);

// Descending class-size sequence with zero-padded lexicographic order.
struct ColorWord {
    std::vector<int> sizes;  // positive, non-increasing

    bool operator==(const ColorWord&) const = default;
    std::string to_string() const;  // "4,4,4"
};

ColorWord color_word(const Coloring& c);

// -1 / 0 / +1: lexicographic after padding the shorter word with zeros
int compare(const ColorWord& a, const ColorWord& b);

// c'(sigma(v)) = c(v)
Coloring apply_map(const Prism& p, const VertexMap& sigma, const Coloring& c);

// Colors of a largest class (all of them, for tie handling), and of the
// second-largest level once `blue` is chosen.
std::vector<int> largest_class_colors(const Coloring& c);
std::vector<int> second_class_colors(const Coloring& c, int blue);

}  // namespace prismeq
