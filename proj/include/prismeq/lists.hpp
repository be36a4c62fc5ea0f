#pragma once

#include <cstdint>
#include <vector>

#include "prismeq/prism.hpp"
#include "prismeq/symmetry.hpp"

namespace prismeq {

// Per-vertex color lists, k-uniform.  Lists are kept sorted ascending and
// duplicate-free; color ids are small nonnegative integers.
struct ListAssignment {
    int n = 0;  // prism size
    int k = 0;
    std::vector<std::vector<int>> lists;  // indexed by vertex id

    const std::vector<int>& at(int v) const { return lists[v]; }
    bool contains(int v, int c) const;
    std::vector<int> universe() const;  // sorted distinct colors in use
    void validate() const;              // throws on broken invariants
};

ListAssignment uniform_assignment(const Prism& p, const std::vector<int>& colors);

// Each list is a uniform k-subset of {0,...,universe_size-1}; deterministic
// for a fixed seed.
ListAssignment random_uniform(const Prism& p, int k, int universe_size, uint64_t seed);

// L'(sigma(v)) = L(v)
ListAssignment apply_map(const Prism& p, const VertexMap& sigma, const ListAssignment& L);

}  // namespace prismeq
