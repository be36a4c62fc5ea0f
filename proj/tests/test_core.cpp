#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "prismeq/canonical.hpp"
#include "prismeq/io.hpp"
#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"
#include "prismeq/rng.hpp"
#include "prismeq/symmetry.hpp"

using namespace prismeq;

TEST_CASE("prism counts and invariants") {
    Prism p3(3);
    CHECK(p3.vertex_count() == 6);
    CHECK(p3.edge_count() == 9);
    CHECK(p3.face_count() == 5);
    CHECK(p3.girth() == 3);
    CHECK(!p3.bipartite());

    CHECK(Prism(4).bipartite());
    CHECK(Prism(5).girth() == 4);
    CHECK(!Prism(5).bipartite());
    CHECK_THROWS_AS(Prism(2), std::invalid_argument);

    // 3-regular, and edges counted by hand match 3n
    for (int n : {3, 4, 6, 9}) {
        Prism p(n);
        std::set<std::pair<int, int>> edges;
        for (int v = 0; v < p.vertex_count(); ++v) {
            auto nb = p.neighbors(v);
            CHECK(nb.size() == 3);
            for (int w : nb) {
                CHECK(p.adjacent(v, w));
                edges.insert({std::min(v, w), std::max(v, w)});
            }
        }
        CHECK(static_cast<int>(edges.size()) == 3 * n);
    }
}

TEST_CASE("windows cover rungs uniformly") {
    Prism p6(6);
    auto w6 = windows(p6, 6);
    CHECK(w6.size() == 6);
    // each rung (hence each vertex) lies in exactly 6 of the 6-rung windows
    std::vector<int> hits(6, 0);
    for (auto& win : w6)
        for (int r : win) ++hits[r];
    for (int h : hits) CHECK(h == 6);

    auto w1 = windows(Prism(8), 1);
    CHECK(w1.size() == 8);
    for (auto& win : w1) CHECK(win.size() == 1);

    auto w4 = windows(p6, 4);
    std::fill(hits.begin(), hits.end(), 0);
    for (auto& win : w4)
        for (int r : win) ++hits[r];
    for (int h : hits) CHECK(h == 4);

    CHECK_THROWS_AS(windows(p6, 0), std::invalid_argument);
    CHECK_THROWS_AS(windows(p6, 7), std::invalid_argument);

    // the counting identity behind the 6-rung argument: any per-rung
    // indicator summed over all windows equals 6 times its total
    Rng rng(99);
    std::vector<int> indicator(6);
    for (int& x : indicator) x = static_cast<int>(rng.below(2));
    long lhs = 0;
    for (auto& win : w6)
        for (int r : win) lhs += indicator[r];
    CHECK(lhs == 6 * std::accumulate(indicator.begin(), indicator.end(), 0L));
}

TEST_CASE("automorphism group: size, closure, adjacency preservation") {
    for (int n : {3, 4, 6}) {
        Prism p(n);
        auto group = automorphism_group(p);
        CHECK(static_cast<int>(group.size()) == 4 * n);
        // all distinct as vertex permutations
        std::set<std::vector<int>> perms;
        for (const auto& g : group) {
            std::vector<int> perm(p.vertex_count());
            for (int v = 0; v < p.vertex_count(); ++v) perm[v] = g.apply(p, v);
            // adjacency preserved
            for (int v = 0; v < p.vertex_count(); ++v)
                for (int w : p.neighbors(v)) CHECK(p.adjacent(perm[v], perm[w]));
            perms.insert(perm);
        }
        CHECK(static_cast<int>(perms.size()) == 4 * n);
        // closure under composition, and compose agrees with apply
        Rng rng(7);
        for (int t = 0; t < 30; ++t) {
            const auto& a = group[rng.below(group.size())];
            const auto& b = group[rng.below(group.size())];
            VertexMap ab = a.compose(b);
            bool member = false;
            for (const auto& g : group) member |= (g == ab);
            CHECK(member);
            for (int v = 0; v < p.vertex_count(); ++v)
                CHECK(ab.apply(p, v) == a.apply(p, b.apply(p, v)));
            VertexMap inv = a.inverse();
            for (int v = 0; v < p.vertex_count(); ++v) CHECK(inv.apply(p, a.apply(p, v)) == v);
        }
    }
}

TEST_CASE("the 4n maps are a proper subgroup of the full group for n=4") {
    // brute force over all vertex permutations of the 4-prism
    Prism p(4);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    long full = 0;
    std::set<std::vector<int>> ours;
    for (const auto& g : automorphism_group(p)) {
        std::vector<int> q(8);
        for (int v = 0; v < 8; ++v) q[v] = g.apply(p, v);
        ours.insert(q);
    }
    long found_ours = 0;
    do {
        bool aut = true;
        for (int v = 0; v < 8 && aut; ++v)
            for (int w : p.neighbors(v))
                if (!p.adjacent(perm[v], perm[w])) {
                    aut = false;
                    break;
                }
        if (aut) {
            ++full;
            if (ours.count(perm)) ++found_ours;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found_ours == 16);  // every canonical map is a genuine automorphism
    CHECK(full == 48);        // the 4-prism is the cube; its full group is larger
}

TEST_CASE("uniform and random assignments") {
    Prism p5(5);
    ListAssignment L = uniform_assignment(p5, {7, 3});
    CHECK(L.k == 2);
    for (int v = 0; v < 10; ++v) CHECK(L.lists[v] == std::vector<int>{3, 7});

    CHECK_THROWS_AS(uniform_assignment(Prism(3), {}), std::invalid_argument);

    Prism p6(6);
    ListAssignment a = random_uniform(p6, 3, 6, 42);
    ListAssignment b = random_uniform(p6, 3, 6, 42);
    CHECK(a.lists == b.lists);  // deterministic per seed
    ListAssignment c = random_uniform(p6, 3, 6, 43);
    CHECK(a.lists != c.lists);

    // only one 3-subset of a 3-color universe
    ListAssignment tight = random_uniform(p6, 3, 3, 5);
    for (int v = 0; v < 12; ++v) CHECK(tight.lists[v] == std::vector<int>{0, 1, 2});

    ListAssignment wide = random_uniform(Prism(8), 3, 9, 17);
    for (const auto& l : wide.lists) CHECK(l.size() == 3);

    CHECK_THROWS_AS(random_uniform(p6, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    Prism p(4);
    ListAssignment L = random_uniform(p, 3, 5, 9);
    std::string text = serialize_assignment(p, L);
    ParsedInstance inst = parse_instance(text);
    REQUIRE(inst.prism.has_value());
    REQUIRE(inst.lists.has_value());
    CHECK(inst.prism->n() == 4);
    CHECK(inst.lists->lists == L.lists);
    CHECK(serialize_assignment(*inst.prism, *inst.lists) == text);  // byte-stable

    Coloring c{std::vector<int>{0, 1, 1, 0, 0, 1, 1, 0}};
    std::string ctext = serialize_prism(p) + serialize_coloring(p, c);
    ParsedInstance inst2 = parse_instance(ctext);
    REQUIRE(inst2.coloring.has_value());
    CHECK(inst2.coloring->color == c.color);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_instance("prism n=4\nlist U9 = 1,2,3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_instance("list U0 = 1,2\n"), ParseError);  // before prism
    CHECK_THROWS_AS(parse_instance("prism n=4\nfoo bar = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("prism n=4\nlist U0 = 1,1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("prism n=2\n"), ParseError);
}

namespace {

// independent oracle: same orbit iff some map plus injective color renaming
// carries one assignment onto the other
bool same_orbit(const Prism& p, const ListAssignment& a, const ListAssignment& b) {
    auto ua = a.universe();
    auto ub = b.universe();
    if (ua.size() != ub.size()) return false;
    for (const auto& sigma : automorphism_group(p)) {
        ListAssignment moved = apply_map(p, sigma, a);
        std::vector<int> target(ub.begin(), ub.end());
        std::sort(target.begin(), target.end());
        do {
            bool ok = true;
            for (int v = 0; v < p.vertex_count() && ok; ++v) {
                std::vector<int> mapped;
                for (int c : moved.lists[v]) {
                    size_t i = std::lower_bound(ua.begin(), ua.end(), c) - ua.begin();
                    mapped.push_back(target[i]);
                }
                std::sort(mapped.begin(), mapped.end());
                ok = (mapped == b.lists[v]);
            }
            if (ok) return true;
        } while (std::next_permutation(target.begin(), target.end()));
    }
    return false;
}

}  // namespace

TEST_CASE("canonical form: orbit equality iff equal keys") {
    Prism p(3);
    auto group = automorphism_group(p);

    // rotations and renamings keep the key
    for (uint64_t seed = 0; seed < 12; ++seed) {
        ListAssignment L = random_uniform(p, 3, 4, seed);
        std::string key = canonical_form(p, L);
        for (const auto& sigma : group) CHECK(canonical_form(p, apply_map(p, sigma, L)) == key);
        // same pattern with translated color ids
        ListAssignment renamed = L;
        for (auto& l : renamed.lists)
            for (auto& x : l) x += 6;
        CHECK(canonical_form(p, renamed) == key);
    }

    // keys agree exactly on orbits (checked against the brute-force oracle)
    std::vector<ListAssignment> pool;
    for (uint64_t seed = 0; seed < 8; ++seed) pool.push_back(random_uniform(p, 3, 4, seed));
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            bool keys_equal = canonical_form(p, pool[i]) == canonical_form(p, pool[j]);
            CHECK(keys_equal == same_orbit(p, pool[i], pool[j]));
        }

    // the canonical key parses back to an assignment in the same orbit
    ListAssignment L = random_uniform(p, 3, 5, 77);
    ParsedInstance inst = parse_instance(canonical_form(p, L));
    REQUIRE(inst.lists.has_value());
    CHECK(same_orbit(p, L, *inst.lists));
    CHECK(is_canonical_representative(p, *inst.lists));
}

TEST_CASE("canonicalization commutes with the group action") {
    for (int n : {3, 5, 8}) {
        Prism p(n);
        for (uint64_t seed = 0; seed < 4; ++seed) {
            ListAssignment L = random_uniform(p, 3, 6, seed);
            std::string key = canonical_form(p, L);
            for (const auto& sigma : automorphism_group(p))
                CHECK(canonical_form(p, apply_map(p, sigma, L)) == key);
        }
    }
}
