#include "prismeq/moves.hpp"

#include <algorithm>

#include "prismeq/window.hpp"

namespace prismeq {

namespace {

using Assignments = std::vector<std::pair<int, int>>;  // (vertex, new color)

struct MoveCtx {
    const Prism& p;
    const ListAssignment& L;
    const Coloring& c;
    const Placement& pl;
    ColorWord base;

    MoveCtx(const Prism& p_, const ListAssignment& L_, const Coloring& c_, const Placement& pl_)
        : p(p_), L(L_), c(c_), pl(pl_), base(color_word(c_)) {}

    int vtx(Layer l, int off) const { return pl.vertex(p, l, off); }
    int col(Layer l, int off) const { return c.color[vtx(l, off)]; }

    std::vector<int> list_minus(int v, std::vector<int> excl) const {
        std::vector<int> out;
        for (int x : L.lists[v])
            if (std::find(excl.begin(), excl.end(), x) == excl.end()) out.push_back(x);
        return out;
    }

    // validate a candidate: proper, list-respecting, strictly smaller word
    std::optional<Coloring> attempt(const Assignments& sets) const {
        Coloring out = c;
        for (auto& [v, x] : sets) out.color[v] = x;
        if (!is_proper(p, out)) return std::nullopt;
        if (!respects_lists(L, out)) return std::nullopt;
        if (compare(color_word(out), base) >= 0) return std::nullopt;
        return out;
    }
};

std::optional<Coloring> first_valid(const MoveCtx& ctx, const std::vector<Assignments>& candidates) {
    for (const auto& cand : candidates)
        if (auto r = ctx.attempt(cand)) return r;
    return std::nullopt;
}

// Terminal fallback: exhaust all list recolorings of the vertices the
// configuration's move touches.  The prose cascades occasionally miss a
// corner (e.g. the gap vertex's list containing the blank's color); the
// support set is tiny, so the exhaustive sweep subsumes them.
std::optional<Coloring> support_sweep(const MoveCtx& ctx, const std::vector<int>& support) {
    std::optional<Coloring> best;
    ColorWord best_word;
    Coloring work = ctx.c;
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == support.size()) {
            if (work.color == ctx.c.color) return;
            if (!is_proper(ctx.p, work)) return;
            ColorWord w = color_word(work);
            if (compare(w, ctx.base) >= 0) return;
            if (!best || compare(w, best_word) < 0 ||
                (compare(w, best_word) == 0 && work.color < best->color)) {
                best = work;
                best_word = w;
            }
            return;
        }
        int v = support[at];
        for (int x : ctx.L.lists[v]) {
            work.color[v] = x;
            self(self, at + 1);
        }
        work.color[v] = ctx.c.color[v];
    };
    rec(rec, 0);
    return best;
}

// F1/F2: recolor the centre off {blue, red}
std::optional<Coloring> move_f12(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), r = ctx.pl.bind.at("red");
    int v = ctx.vtx(Layer::U, 1);
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(v, {b, r})) cands.push_back({{v, z}});
    return first_valid(ctx, cands);
}

// F3/F4 share the cascade with blue and red exchanged; `keep` is the color
// the braid vertex U1 rotates onto (blue in F3, red in F4).
std::optional<Coloring> move_f34(const MoveCtx& ctx, bool swapped) {
    int b = ctx.pl.bind.at("blue"), r = ctx.pl.bind.at("red");
    int keep = swapped ? r : b;
    int U0 = ctx.vtx(Layer::U, 0), U1 = ctx.vtx(Layer::U, 1), U2 = ctx.vtx(Layer::U, 2);
    int V1 = ctx.vtx(Layer::V, 1), V2 = ctx.vtx(Layer::V, 2);
    int x = ctx.c.color[V2];
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U1, {b, r, ctx.c.color[U0]})) cands.push_back({{U1, z}});
    for (int z : ctx.list_minus(U2, {b, r, x})) cands.push_back({{U2, z}});
    for (int z : ctx.list_minus(V1, {b, r, x})) cands.push_back({{V1, z}});
    for (int c0 : ctx.list_minus(V2, {keep, x}))
        cands.push_back({{V2, c0}, {U2, x}, {V1, x}, {U1, keep}});
    return first_valid(ctx, cands);
}

// F5: recolor blue V1 directly, else rotate V1 onto c(V2)
std::optional<Coloring> move_f5(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), y = ctx.pl.bind.at("y");
    int V1 = ctx.vtx(Layer::V, 1), V2 = ctx.vtx(Layer::V, 2);
    int x = ctx.c.color[V2];
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(V1, {b, y, x})) cands.push_back({{V1, z}});
    for (int z : ctx.list_minus(V2, {b, x})) cands.push_back({{V1, x}, {V2, z}});
    return first_valid(ctx, cands);
}

// F6: recolor blue U1 directly, else rotate U1 onto c(V1)
std::optional<Coloring> move_f6(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), y = ctx.pl.bind.at("y");
    int U1 = ctx.vtx(Layer::U, 1), V1 = ctx.vtx(Layer::V, 1);
    int x = ctx.c.color[V1];
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U1, {b, y, x})) cands.push_back({{U1, z}});
    for (int z : ctx.list_minus(V1, {b, x})) cands.push_back({{U1, x}, {V1, z}});
    return first_valid(ctx, cands);
}

// F7: the B3 starts at V3.  Cascade per the seven-rung lemma.
std::optional<Coloring> move_f7(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), rr = ctx.pl.bind.at("r"), yy = ctx.pl.bind.at("y");
    int V1 = ctx.vtx(Layer::V, 1), U2 = ctx.vtx(Layer::U, 2), V2 = ctx.vtx(Layer::V, 2);
    int U3 = ctx.vtx(Layer::U, 3), V3 = ctx.vtx(Layer::V, 3), V4 = ctx.vtx(Layer::V, 4);
    int g = ctx.c.color[U3], w = ctx.c.color[V4], cv1 = ctx.c.color[V1];
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(V3, {b, yy, g, w})) cands.push_back({{V3, z}});
    if (g == yy)
        for (int z : ctx.list_minus(V4, {b, w})) cands.push_back({{V3, w}, {V4, z}});
    for (int c0 : ctx.list_minus(V3, {b, g, yy}))
        for (int z : ctx.list_minus(V4, {b, c0})) cands.push_back({{V3, c0}, {V4, z}});
    for (int z1 : ctx.list_minus(U3, {b, g, rr}))
        for (int z2 : ctx.list_minus(V4, {b, g})) cands.push_back({{V3, g}, {U3, z1}, {V4, z2}});
    for (int z1 : ctx.list_minus(U2, {b, rr, yy}))
        for (int z2 : ctx.list_minus(V4, {b, g}))
            cands.push_back({{V3, g}, {U3, rr}, {U2, z1}, {V4, z2}});
    for (int z1 : ctx.list_minus(V2, {b, yy, cv1}))
        for (int z2 : ctx.list_minus(V4, {b, g}))
            cands.push_back({{V3, g}, {U3, rr}, {U2, yy}, {V2, z1}, {V4, z2}});
    if (cv1 != rr) {
        for (int z : ctx.list_minus(V1, {b, cv1})) cands.push_back({{V3, yy}, {V2, cv1}, {V1, z}});
    } else {
        for (int z : ctx.list_minus(V1, {b, rr}))
            cands.push_back({{V3, g}, {U3, rr}, {U2, yy}, {V2, rr}, {V1, z}});
    }
    return first_valid(ctx, cands);
}

// F8: the B3 starts at U3.  Cascade with cases on c(U4).
std::optional<Coloring> move_f8(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), rr = ctx.pl.bind.at("r"), yy = ctx.pl.bind.at("y");
    int V1 = ctx.vtx(Layer::V, 1), U2 = ctx.vtx(Layer::U, 2), V2 = ctx.vtx(Layer::V, 2);
    int U3 = ctx.vtx(Layer::U, 3), V3 = ctx.vtx(Layer::V, 3), U4 = ctx.vtx(Layer::U, 4);
    int g = ctx.c.color[V3], h = ctx.c.color[U4], cv1 = ctx.c.color[V1];
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U3, {b, rr, g, h})) cands.push_back({{U3, z}});
    for (int z : ctx.list_minus(U4, {b, h})) cands.push_back({{U3, h}, {U4, z}});
    if (h == rr) {
        for (int z : ctx.list_minus(V3, {b, g, yy})) cands.push_back({{U3, g}, {V3, z}});
        for (int z : ctx.list_minus(V2, {rr, yy, cv1})) cands.push_back({{U3, g}, {V3, yy}, {V2, z}});
        for (int z : ctx.list_minus(U2, {b, g, rr}))
            cands.push_back({{U3, g}, {V3, yy}, {V2, rr}, {U2, z}});
        for (int z : ctx.list_minus(V1, {b, cv1}))
            cands.push_back({{U3, g}, {V3, yy}, {V2, cv1}, {V1, z}});
    } else {
        for (int z : ctx.list_minus(U2, {b, rr, yy})) cands.push_back({{U3, rr}, {U2, z}});
        for (int z : ctx.list_minus(V2, {g, yy, cv1})) cands.push_back({{U3, rr}, {U2, yy}, {V2, z}});
        for (int z : ctx.list_minus(V1, {b, cv1}))
            cands.push_back({{U3, rr}, {U2, yy}, {V2, cv1}, {V1, z}});
    }
    return first_valid(ctx, cands);
}

std::optional<Coloring> move_p4c1(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), r = ctx.pl.bind.at("r");
    int U0 = ctx.vtx(Layer::U, 0), V2 = ctx.vtx(Layer::V, 2);
    std::vector<Assignments> cands;
    for (int z1 : ctx.list_minus(U0, {b, r}))
        for (int z2 : ctx.list_minus(V2, {b, r})) cands.push_back({{U0, z1}, {V2, z2}});
    return first_valid(ctx, cands);
}

std::optional<Coloring> move_p4c2(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), g = ctx.pl.bind.at("g");
    int V2 = ctx.vtx(Layer::V, 2);
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(V2, {b, g})) cands.push_back({{V2, z}});
    return first_valid(ctx, cands);
}

std::optional<Coloring> move_p4c3(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), r = ctx.pl.bind.at("r"), g = ctx.pl.bind.at("g");
    int U0 = ctx.vtx(Layer::U, 0), U1 = ctx.vtx(Layer::U, 1);
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U1, {b, r, g})) cands.push_back({{U1, z}});
    for (int z : ctx.list_minus(U0, {b, r})) cands.push_back({{U1, r}, {U0, z}});
    return first_valid(ctx, cands);
}

std::optional<Coloring> move_p4c4(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue"), r = ctx.pl.bind.at("r"), g = ctx.pl.bind.at("g");
    int U1 = ctx.vtx(Layer::U, 1), V1 = ctx.vtx(Layer::V, 1);
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U1, {b, r, g})) cands.push_back({{U1, z}});
    for (int z : ctx.list_minus(V1, {b, g})) cands.push_back({{U1, g}, {V1, z}});
    return first_valid(ctx, cands);
}

std::optional<Coloring> move_p4c5(const MoveCtx& ctx) {
    int b = ctx.pl.bind.at("blue");
    int r = ctx.pl.bind.at("r"), g = ctx.pl.bind.at("g"), y = ctx.pl.bind.at("y");
    int U0 = ctx.vtx(Layer::U, 0), U1 = ctx.vtx(Layer::U, 1);
    int V1 = ctx.vtx(Layer::V, 1), U2 = ctx.vtx(Layer::U, 2);
    std::vector<Assignments> cands;
    for (int z : ctx.list_minus(U1, {b, r, g, y})) cands.push_back({{U1, z}});
    const std::pair<int, int> picks[3] = {{r, U0}, {g, V1}, {y, U2}};
    for (auto [theta, omega] : picks) {
        if (!ctx.L.contains(U1, theta)) continue;
        for (int z : ctx.list_minus(omega, {b, theta})) cands.push_back({{U1, theta}, {omega, z}});
    }
    return first_valid(ctx, cands);
}

}  // namespace

namespace {

// the vertices each configuration's move may recolor
std::vector<int> move_support(const MoveCtx& ctx, const std::string& name) {
    auto v = [&](Layer l, int off) { return ctx.vtx(l, off); };
    if (name == "F1" || name == "F2") return {v(Layer::U, 1)};
    if (name == "F3" || name == "F4")
        return {v(Layer::U, 1), v(Layer::U, 2), v(Layer::V, 1), v(Layer::V, 2)};
    if (name == "F5") return {v(Layer::V, 1), v(Layer::V, 2)};
    if (name == "F6") return {v(Layer::U, 1), v(Layer::V, 1)};
    if (name == "F7")
        return {v(Layer::V, 1), v(Layer::U, 2), v(Layer::V, 2),
                v(Layer::U, 3), v(Layer::V, 3), v(Layer::V, 4)};
    if (name == "F8")
        return {v(Layer::V, 1), v(Layer::U, 2), v(Layer::V, 2), v(Layer::U, 3), v(Layer::U, 4)};
    if (name == "P4C1") return {v(Layer::U, 0), v(Layer::V, 2)};
    if (name == "P4C2") return {v(Layer::V, 2)};
    if (name == "P4C3") return {v(Layer::U, 0), v(Layer::U, 1)};
    if (name == "P4C4") return {v(Layer::U, 1), v(Layer::V, 1)};
    if (name == "P4C5") return {v(Layer::U, 0), v(Layer::U, 1), v(Layer::V, 1), v(Layer::U, 2)};
    return {};
}

}  // namespace

std::optional<Coloring> apply_move(const Prism& p, const ListAssignment& L, const Coloring& c,
                                   const Placement& placement, const Pattern& pat) {
    MoveCtx ctx(p, L, c, placement);
    std::optional<Coloring> out;
    if (pat.name == "F1" || pat.name == "F2") out = move_f12(ctx);
    else if (pat.name == "F3") out = move_f34(ctx, false);
    else if (pat.name == "F4") out = move_f34(ctx, true);
    else if (pat.name == "F5") out = move_f5(ctx);
    else if (pat.name == "F6") out = move_f6(ctx);
    else if (pat.name == "F7") out = move_f7(ctx);
    else if (pat.name == "F8") out = move_f8(ctx);
    else if (pat.name == "P4C1") out = move_p4c1(ctx);
    else if (pat.name == "P4C2") out = move_p4c2(ctx);
    else if (pat.name == "P4C3") out = move_p4c3(ctx);
    else if (pat.name == "P4C4") out = move_p4c4(ctx);
    else if (pat.name == "P4C5") out = move_p4c5(ctx);
    else
        return std::nullopt;  // match-only patterns (W6C*) carry no move
    if (!out) out = support_sweep(ctx, move_support(ctx, pat.name));
    if (!out && (pat.name == "F7" || pat.name == "F8")) {
        // adversarial lists can dodge every prose candidate (e.g. the gap
        // vertex's list being exactly {b, y, c(U3)}); the configuration's own
        // window still reduces, so sweep it whole
        std::vector<int> rungs;
        for (int off = 0; off < pat.width; ++off)
            rungs.push_back(p.index(placement.vertex(p, Layer::U, off)));
        out = window_improve_at(p, L, c, rungs);
    }
    return out;
}

std::vector<ConfigHit> assert_config_free(const Prism& p, const Coloring& c,
                                          const ListAssignment& L,
                                          const std::vector<Pattern>& configs) {
    std::vector<ConfigHit> hits;
    for (const Pattern& pat : configs) {
        for (const Placement& pl : find_matches(p, c, pat)) {
            if (auto improved = apply_move(p, L, c, pl, pat))
                hits.push_back({pat.name, pl, std::move(*improved)});
        }
    }
    return hits;
}

}  // namespace prismeq
