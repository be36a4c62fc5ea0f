#pragma once

#include <string>
#include <vector>

#include "prismeq/prism.hpp"

namespace prismeq {

// One element of the canonical 4n-map group: i -> rot + (reflect ? -i : i),
// optionally followed by a layer swap.  This is always a subgroup of the full
// automorphism group (proper for n=3,4 whose prisms have extra symmetry).
struct VertexMap {
    int n = 0;
    int rot = 0;
    bool reflect = false;
    bool swap_layers = false;

    int apply(const Prism& p, int v) const {
        Layer l = p.layer(v);
        int i = p.index(v);
        int j = p.mod(rot + (reflect ? -i : i));
        return p.id(swap_layers ? other(l) : l, j);
    }

    // (a.compose(b)).apply(v) == a.apply(b.apply(v))
    VertexMap compose(const VertexMap& b) const;
    VertexMap inverse() const;
    bool operator==(const VertexMap&) const = default;

    std::string kind() const;
};

// Exactly 4n maps: n rotations x {id, reflection} x {id, layer swap}.
std::vector<VertexMap> automorphism_group(const Prism& p);

}  // namespace prismeq
