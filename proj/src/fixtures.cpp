#include "prismeq/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "prismeq/rng.hpp"

namespace prismeq {

namespace {

// Builds lists around an existing coloring: L(v) = {c(v)} + 2 random others.
ListAssignment lists_for(const Prism& p, const Coloring& c, Rng& rng, int universe) {
    ListAssignment L{p.n(), 3, {}};
    L.lists.resize(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) {
        std::vector<int> l{c.color[v]};
        while (l.size() < 3) {
            int x = static_cast<int>(rng.below(universe));
            if (std::find(l.begin(), l.end(), x) == l.end()) l.push_back(x);
        }
        std::sort(l.begin(), l.end());
        L.lists[v] = std::move(l);
    }
    return L;
}

void force_list(ListAssignment& L, int v, std::vector<int> colors) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    if (colors.size() != 3) return;  // guard list would not be 3-uniform; keep the random one
    L.lists[v] = std::move(colors);
}

struct Builder {
    Prism p;
    Coloring c;
    Rng& rng;
    size_t pool_cursor = 0;

    Builder(int n, Rng& rng_) : p(n), c{std::vector<int>(2 * n, -1)}, rng(rng_) {}

    int& at(Layer l, int i) { return c.color[p.id(l, i)]; }

    // round-robin over the pool so no filler class can rival the blue class
    int pool_fill(int v, const std::vector<int>& pool) {
        for (size_t t = 0; t < pool.size(); ++t) {
            int x = pool[(pool_cursor + t) % pool.size()];
            bool ok = true;
            for (int w : p.neighbors(v))
                if (c.color[w] == x) ok = false;
            if (ok) {
                ++pool_cursor;
                c.color[v] = x;
                return x;
            }
        }
        throw std::logic_error("fixture pool exhausted");
    }

    // blue zigzag over rungs [from, to], starting in `layer` at `from`,
    // partners filled from the pool
    void blue_zigzag(int from, int to, Layer layer, int blue, const std::vector<int>& pool) {
        for (int j = from; j <= to; ++j) {
            Layer l = ((j - from) % 2 == 0) ? layer : other(layer);
            at(l, j) = blue;
        }
        for (int j = from; j <= to; ++j) {
            Layer l = ((j - from) % 2 == 0) ? other(layer) : layer;
            pool_fill(p.id(l, j), pool);
        }
    }
};

// distinct colors 0..count-1 shuffled into arbitrary ids below `universe`
std::vector<int> pick_distinct(Rng& rng, int count, int universe) {
    std::vector<int> pool(universe);
    for (int i = 0; i < universe; ++i) pool[i] = i;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.below(universe - i));
        std::swap(pool[i], pool[j]);
    }
    return {pool.begin(), pool.begin() + count};
}

struct Plant {
    Prism p;
    Coloring c;
    ListAssignment L;
};

// F1/F2: the proper 2-coloring of an even prism; every class is one of the
// two largest, so the lemma hypotheses hold trivially.
Plant plant_f12(const std::string& name, Rng& rng) {
    int m = 6 + 2 * static_cast<int>(rng.below(4));  // 6..12 even
    auto ids = pick_distinct(rng, 2, 5);
    int B = ids[0], R = ids[1];
    bool f2 = (name == "F2");
    int center = f2 ? R : B;   // U1 cell
    int around = f2 ? B : R;
    Builder b(m, rng);
    // U1 carries `center`: u_i = center iff i odd
    for (int i = 0; i < m; ++i) {
        b.at(Layer::U, i) = (i % 2 == 1) ? center : around;
        b.at(Layer::V, i) = (i % 2 == 1) ? around : center;
    }
    ListAssignment L = lists_for(b.p, b.c, rng, 6);
    return {b.p, b.c, L};
}

Plant plant_f34(const std::string& name, Rng& rng) {
    int m = 8 + 2 * static_cast<int>(rng.below(3));  // 8..12 even
    auto ids = pick_distinct(rng, 4, 6);
    int B = ids[0], R = ids[1], y0 = ids[2], y1 = ids[3];
    if (name == "F4") std::swap(B, R);
    Builder b(m, rng);
    b.at(Layer::U, 1) = R;
    b.at(Layer::U, 2) = B;
    b.at(Layer::U, 3) = R;
    b.at(Layer::V, 0) = R;
    b.at(Layer::V, 1) = B;
    b.at(Layer::V, 2) = y0;
    b.at(Layer::V, 3) = B;
    for (int j = 4; j < m; ++j) {
        b.at(Layer::U, j) = (j % 2 == 0) ? B : R;
        b.at(Layer::V, j) = (j % 2 == 0) ? R : B;
    }
    b.at(Layer::U, 0) = (rng.below(2) == 0) ? y0 : y1;
    ListAssignment L = lists_for(b.p, b.c, rng, 6);
    if (rng.below(2) == 0) {
        // force the proof's guard lists so the composite rotation fires
        force_list(L, b.p.id(Layer::U, 1), {B, R, b.at(Layer::U, 0)});
        force_list(L, b.p.id(Layer::U, 2), {B, R, y0});
        force_list(L, b.p.id(Layer::V, 1), {B, R, y0});
    }
    return {b.p, b.c, L};
}

Plant plant_f5(const std::string&, Rng& rng) {
    int m = 8 + static_cast<int>(rng.below(5));  // 8..12
    auto ids = pick_distinct(rng, 6, 6);
    int B = ids[0], y0 = ids[1], x0 = ids[2];
    std::vector<int> pool{ids[3], ids[4], ids[5]};
    Builder b(m, rng);
    b.at(Layer::V, 0) = y0;
    b.at(Layer::U, 1) = y0;
    b.at(Layer::V, 1) = B;
    b.at(Layer::U, 2) = B;
    b.at(Layer::V, 2) = x0;
    b.at(Layer::V, 3) = B;
    b.blue_zigzag(4, m - 1, Layer::U, B, pool);
    b.pool_fill(b.p.id(Layer::U, 3), pool);
    b.pool_fill(b.p.id(Layer::U, 0), pool);
    ListAssignment L = lists_for(b.p, b.c, rng, 6);
    if (rng.below(2) == 0) force_list(L, b.p.id(Layer::V, 1), {B, y0, x0});
    return {b.p, b.c, L};
}

Plant plant_f6(const std::string&, Rng& rng) {
    int m = 8 + 2 * static_cast<int>(rng.below(3));  // even 8..12
    auto ids = pick_distinct(rng, 6, 6);
    int B = ids[0], y0 = ids[1], x0 = ids[2];
    std::vector<int> pool{ids[3], ids[4], ids[5]};
    Builder b(m, rng);
    b.at(Layer::U, 0) = y0;
    b.at(Layer::U, 1) = B;
    b.at(Layer::U, 2) = y0;
    b.at(Layer::V, 0) = B;
    b.at(Layer::V, 1) = x0;
    b.at(Layer::V, 2) = B;
    b.blue_zigzag(3, m - 1, Layer::U, B, pool);
    ListAssignment L = lists_for(b.p, b.c, rng, 6);
    if (rng.below(2) == 0) force_list(L, b.p.id(Layer::U, 1), {B, y0, x0});
    return {b.p, b.c, L};
}

Plant plant_f78(const std::string& name, Rng& rng) {
    int m = 10 + static_cast<int>(rng.below(4));  // 10..13
    auto ids = pick_distinct(rng, 7, 7);
    int B = ids[0], r0 = ids[1], y0 = ids[2];
    std::vector<int> pool{ids[3], ids[4], ids[5], ids[6]};
    Builder b(m, rng);
    bool f8 = (name == "F8");
    b.at(Layer::V, 0) = B;
    b.at(Layer::U, 1) = B;
    b.at(Layer::U, 2) = r0;
    b.at(Layer::V, 2) = y0;
    if (f8) {
        b.at(Layer::U, 3) = B;
        b.at(Layer::V, 4) = B;
        b.at(Layer::U, 5) = B;
    } else {
        b.at(Layer::V, 3) = B;
        b.at(Layer::U, 4) = B;
        b.at(Layer::V, 5) = B;
    }
    // fill rungs 7..m-1 with a blue zigzag that ends in the U layer at rung
    // m-1 (V0 is blue, U0 is not)
    Layer start = ((m - 1 - 7) % 2 == 0) ? Layer::U : Layer::V;
    b.blue_zigzag(7, m - 1, start, B, pool);
    // remaining blanks of the planted window, properness-checked
    for (int v = 0; v < b.p.vertex_count(); ++v)
        if (b.c.color[v] < 0) b.pool_fill(v, pool);
    ListAssignment L = lists_for(b.p, b.c, rng, 7);
    if (rng.below(2) == 0) {
        // partial guard forcing along the cascade
        if (!f8) {
            int g = b.at(Layer::U, 3);
            force_list(L, b.p.id(Layer::V, 3), {B, g, y0});
            if (rng.below(2) == 0) force_list(L, b.p.id(Layer::U, 3), {B, g, r0});
            if (rng.below(2) == 0) force_list(L, b.p.id(Layer::U, 2), {B, r0, y0});
        } else {
            int g = b.at(Layer::V, 3);
            force_list(L, b.p.id(Layer::U, 3), {B, g, r0});
            if (rng.below(2) == 0) force_list(L, b.p.id(Layer::U, 2), {B, r0, y0});
        }
    }
    return {b.p, b.c, L};
}

Plant plant_p4(const std::string& name, Rng& rng) {
    auto ids = pick_distinct(rng, 5, 6);
    int B = ids[0], r = ids[1], g = ids[2], y = ids[3], h = ids[4];
    Builder b(4, rng);
    b.at(Layer::V, 0) = B;
    b.at(Layer::U, 1) = B;
    b.at(Layer::V, 2) = B;
    b.at(Layer::U, 3) = B;
    int q0, q1, q2, q3;  // colors of U0, V1, U2, V3
    if (name == "P4C1") {
        q0 = q1 = q2 = q3 = r;
    } else if (name == "P4C2") {
        q0 = h, q1 = g, q2 = g, q3 = g;
    } else if (name == "P4C3") {
        q0 = r, q1 = g, q2 = g, q3 = r;
    } else if (name == "P4C4") {
        q0 = r, q1 = g, q2 = r, q3 = g;
    } else {
        q0 = r, q1 = g, q2 = y;
        int opts[4] = {r, g, y, h};
        q3 = opts[rng.below(4)];
    }
    b.at(Layer::U, 0) = q0;
    b.at(Layer::V, 1) = q1;
    b.at(Layer::U, 2) = q2;
    b.at(Layer::V, 3) = q3;
    ListAssignment L = lists_for(b.p, b.c, rng, 6);
    if (rng.below(2) == 0) {
        if (name == "P4C3" || name == "P4C4") force_list(L, b.p.id(Layer::U, 1), {B, r, g});
        if (name == "P4C5") {
            int two[2];
            two[0] = (rng.below(2) == 0) ? r : g;
            two[1] = (two[0] == r) ? ((rng.below(2) == 0) ? g : y) : y;
            force_list(L, b.p.id(Layer::U, 1), {B, two[0], two[1]});
        }
    }
    return {b.p, b.c, L};
}

}  // namespace

Fixture make_fixture(const std::string& config, uint64_t seed) {
    Rng rng(derive_seed(seed, std::hash<std::string>{}(config)));
    Plant plant = [&]() {
        if (config == "F1" || config == "F2") return plant_f12(config, rng);
        if (config == "F3" || config == "F4") return plant_f34(config, rng);
        if (config == "F5") return plant_f5(config, rng);
        if (config == "F6") return plant_f6(config, rng);
        if (config == "F7" || config == "F8") return plant_f78(config, rng);
        if (config.rfind("P4C", 0) == 0) return plant_p4(config, rng);
        throw std::invalid_argument("no fixture generator for " + config);
    }();
    if (!is_proper(plant.p, plant.c)) throw std::logic_error("fixture generator built an improper coloring");
    if (!respects_lists(plant.L, plant.c)) throw std::logic_error("fixture lists drop the current coloring");

    // scramble through a random symmetry; the canonical plant sits at the
    // identity placement, so the planted placement becomes tau
    VertexMap tau{plant.p.n(), static_cast<int>(rng.below(plant.p.n())), rng.below(2) == 1,
                  rng.below(2) == 1};
    Fixture out{plant.p, apply_map(plant.p, tau, plant.L), apply_map(plant.p, tau, plant.c),
                Placement{tau, {}}, config};

    // recover the role binding by matching; the planted placement must be
    // among the matches
    const Pattern& pat = builtin_pattern(config);
    for (const Placement& pl : find_matches(out.prism, out.coloring, pat)) {
        if (pl.sigma == tau) {
            out.placement = pl;
            return out;
        }
    }
    throw std::logic_error("planted fixture not matched at its own placement (" + config + ")");
}

ListAssignment even_unsat_assignment(const Prism& p) {
    if (p.n() % 2 != 0) throw std::invalid_argument("even_unsat_assignment needs even n");
    // frozen gadget on rungs 0..3 (colors b=0, g=1, r=2): top row all {b,g},
    // bottom row {b,r},{g,r},{g,r},{b,r}; rest of the prism {b,g}
    ListAssignment L{p.n(), 2, std::vector<std::vector<int>>(p.vertex_count(), {0, 1})};
    L.lists[p.id(Layer::V, 0)] = {0, 2};
    L.lists[p.id(Layer::V, 1)] = {1, 2};
    L.lists[p.id(Layer::V, 2)] = {1, 2};
    L.lists[p.id(Layer::V, 3)] = {0, 2};
    L.validate();
    return L;
}

Coloring random_proper_coloring(const Prism& p, uint64_t seed, int palette,
                                bool heavy_first_color) {
    Rng rng(derive_seed(seed, 0x70726f706572ULL));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Coloring c{std::vector<int>(p.vertex_count(), -1)};
        bool ok = true;
        for (int v = 0; v < p.vertex_count() && ok; ++v) {
            int pick = -1;
            for (int t = 0; t < 12; ++t) {
                int x = heavy_first_color && rng.below(3) != 0 ? 0
                                                               : static_cast<int>(rng.below(palette));
                bool clash = false;
                for (int w : p.neighbors(v))
                    if (c.color[w] == x) clash = true;
                if (!clash) {
                    pick = x;
                    break;
                }
            }
            if (pick < 0) {
                for (int x = 0; x < palette && pick < 0; ++x) {
                    bool clash = false;
                    for (int w : p.neighbors(v))
                        if (c.color[w] == x) clash = true;
                    if (!clash) pick = x;
                }
            }
            if (pick < 0)
                ok = false;
            else
                c.color[v] = pick;
        }
        if (ok && is_proper(p, c)) return c;
    }
    throw std::logic_error("random_proper_coloring failed to converge");
}

}  // namespace prismeq
