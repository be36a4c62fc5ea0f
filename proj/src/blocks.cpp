#include "prismeq/blocks.hpp"

#include <algorithm>

namespace prismeq {

std::string to_string(BlockTag t) {
    switch (t) {
        case BlockTag::B0: return "B0";
        case BlockTag::B1: return "B1";
        case BlockTag::B2: return "B2";
        case BlockTag::B3: return "B3";
    }
    return "?";
}

std::vector<int> BlockSequence::rungs(size_t i) const {
    const Block& b = blocks[i];
    std::vector<int> out;
    for (int j = 0; j < rung_count(b.tag); ++j) out.push_back(((b.start_rung + j) % n + n) % n);
    return out;
}

std::string BlockSequence::tags_string() const {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ',';
        s += to_string(blocks[i].tag);
    }
    return s;
}

std::variant<BlockSequence, BlueRunTooLong> block_decompose(const Prism& p, const Coloring& c,
                                                            int blue) {
    int n = p.n();
    std::vector<char> has_blue(n, 0);
    for (int i = 0; i < n; ++i)
        has_blue[i] = (c.color[p.id(Layer::U, i)] == blue || c.color[p.id(Layer::V, i)] == blue);

    bool any_free = std::find(has_blue.begin(), has_blue.end(), 0) != has_blue.end();
    if (!any_free) return BlueRunTooLong{0, n};

    // maximal cyclic blue runs
    std::vector<int> owner(n, -1);  // rung -> block index (filled below)
    std::vector<Block> blocks;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!has_blue[i] || seen[i]) continue;
        if (has_blue[p.mod(i - 1)] && !seen[p.mod(i - 1)] && i != 0) continue;  // not a run start
        // find the true start of the run containing i (walk left)
        int start = i;
        while (has_blue[p.mod(start - 1)]) start = p.mod(start - 1);
        int len = 0;
        while (has_blue[p.mod(start + len)]) ++len;
        if (len >= 4) return BlueRunTooLong{start, len};
        Block b{static_cast<BlockTag>(len), start};
        int idx = static_cast<int>(blocks.size());
        blocks.push_back(b);
        for (int j = 0; j < len; ++j) {
            seen[p.mod(start + j)] = 1;
            owner[p.mod(start + j)] = idx;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (has_blue[i]) continue;
        owner[i] = static_cast<int>(blocks.size());
        blocks.push_back(Block{BlockTag::B0, i});
    }

    // cyclic order starting with the block containing rung 0
    BlockSequence seq{n, {}};
    int i = blocks[owner[0]].start_rung;
    do {
        const Block& b = blocks[owner[i]];
        seq.blocks.push_back(b);
        i = p.mod(b.start_rung + rung_count(b.tag));
    } while (i != blocks[owner[0]].start_rung);
    return seq;
}

}  // namespace prismeq
