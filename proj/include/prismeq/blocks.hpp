#pragma once

#include <string>
#include <variant>
#include <vector>

#include "prismeq/coloring.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

enum class BlockTag { B0, B1, B2, B3 };

inline int rung_count(BlockTag t) { return t == BlockTag::B0 ? 1 : static_cast<int>(t); }
std::string to_string(BlockTag t);

// One block of the decomposition: B1/B2/B3 = a maximal run of 1-3 consecutive
// rungs containing blue vertices, B0 = a single blue-free rung.  A block owns
// its rungs, its internal 4-faces and the 4-face to its right.
struct Block {
    BlockTag tag;
    int start_rung = 0;  // rungs start_rung .. start_rung + k - 1 (mod n)
};

struct BlockSequence {
    int n = 0;
    std::vector<Block> blocks;  // cyclic order, first block contains rung 0

    std::vector<int> rungs(size_t i) const;
    std::string tags_string() const;  // "B1,B0,B1,B0,B0,B0"
};

struct BlueRunTooLong {
    int start_rung = 0;
    int length = 0;  // >= 4, or n when every rung is blue
};

// Maximal blue runs become B1/B2/B3 by length; every other rung is a B0.
std::variant<BlockSequence, BlueRunTooLong> block_decompose(const Prism& p, const Coloring& c,
                                                            int blue);

}  // namespace prismeq
