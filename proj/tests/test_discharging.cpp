#include <doctest.h>

#include <algorithm>

#include "prismeq/discharge.hpp"
#include "prismeq/fixtures.hpp"
#include "prismeq/rng.hpp"
#include "prismeq/solver.hpp"

using namespace prismeq;

namespace {

Coloring with_blues(const Prism& p, const std::vector<std::pair<Layer, int>>& blues,
                    int blue = 0) {
    Coloring c{std::vector<int>(p.vertex_count(), -1)};
    for (auto [l, i] : blues) c.color[p.id(l, i)] = blue;
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (c.color[v] >= 0) continue;
        for (int x = 1; x < 6; ++x) {
            bool ok = true;
            for (int w : p.neighbors(v))
                if (c.color[w] == x) ok = false;
            if (ok) {
                c.color[v] = x;
                break;
            }
        }
        REQUIRE(c.color[v] >= 0);
    }
    REQUIRE(is_proper(p, c));
    return c;
}

Charge charge_of_tag(const Prism& p, const Coloring& c, int blue, BlockTag tag, int start_rung) {
    auto dec = block_decompose(p, c, blue);
    REQUIRE(std::holds_alternative<BlockSequence>(dec));
    const auto& seq = std::get<BlockSequence>(dec);
    auto charges = block_charges(p, c, blue, seq);
    for (size_t i = 0; i < seq.blocks.size(); ++i)
        if (seq.blocks[i].tag == tag && seq.blocks[i].start_rung == start_rung) return charges[i];
    FAIL("block not found in sequence");
    return Charge{};
}

}  // namespace

TEST_CASE("vertex and face charges") {
    Prism p(6);
    // blue at (U,1) and (U,3): vertex U2 sees two blue neighbours
    Coloring c = with_blues(p, {{Layer::U, 1}, {Layer::U, 3}});
    CHECK(vertex_charge(p, c, 0, p.id(Layer::U, 2)).thirds == -3);  // 1 - 2
    CHECK(vertex_charge(p, c, 0, p.id(Layer::U, 1)).thirds == 3);   // blue, no blue nbrs
    // face 1 = rungs 1,2 holds exactly one blue vertex
    CHECK(face_charge(p, c, 0, 1).thirds == 1);  // 4/3 - 1
    CHECK(face_charge(p, c, 0, 4).thirds == 4);  // blue-free 4-face
    CHECK(face_charge(p, c, 0, p.n()).thirds == 0);      // n-faces carry zero
    CHECK(face_charge(p, c, 0, p.n() + 1).thirds == 0);
    CHECK_THROWS_AS(face_charge(p, c, 0, 99), std::out_of_range);
}

TEST_CASE("total charge identity 10n/3 - 5|Blue|") {
    // |Blue| = 5 on the 6-prism: 20 - 25 = -5
    Prism p(6);
    Coloring c5 = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2}, {Layer::V, 3},
                                 {Layer::U, 4}});
    CHECK(total_charge(p, c5, 0).thirds == -15);

    // |Blue| = 4 = ceil(12/3): exactly zero
    Coloring c4 = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 3}, {Layer::V, 4}});
    CHECK(total_charge(p, c4, 0).thirds == 0);

    // random colorings across sizes: identity holds exactly, split sums too
    Rng rng(63);
    for (int n : {6, 7, 9, 12}) {
        Prism pn(n);
        for (int t = 0; t < 50; ++t) {
            Coloring c = random_proper_coloring(pn, rng.next(), 4, t % 2 == 0);
            int blue = largest_class_colors(c)[0];
            int bs = 0;
            for (int x : c.color) bs += (x == blue);
            Charge vsum, fsum;
            for (int v = 0; v < pn.vertex_count(); ++v) vsum += vertex_charge(pn, c, blue, v);
            for (int f = 0; f < pn.face_count(); ++f) fsum += face_charge(pn, c, blue, f);
            CHECK(vsum.thirds == 3LL * (2 * n - 3 * bs));  // 2n - 3|Blue|
            CHECK(fsum.thirds == 4LL * n - 6LL * bs);      // 4n/3 - 2|Blue|
            CHECK(total_charge(pn, c, blue).thirds == 10LL * n - 15LL * bs);
            // negative exactly when the class is too large
            if (bs > (2 * n + 2) / 3) CHECK(total_charge(pn, c, blue).thirds < 0);
        }
    }
}

TEST_CASE("block charges reproduce the eight table values") {
    int B = 0;

    // B0 with left B0 -> 10/3; B0 with a blue block on its left -> 7/3
    {
        Prism p(8);
        Coloring c = with_blues(p, {{Layer::U, 0}});
        CHECK(charge_of_tag(p, c, B, BlockTag::B0, 2).thirds == 10);  // left is B0(1)
        CHECK(charge_of_tag(p, c, B, BlockTag::B0, 1).thirds == 7);   // left is B1(0)
    }
    // B1: 8/3 with left B0, 5/3 otherwise (left through the absorbed rung)
    {
        Prism p(8);
        Coloring lone = with_blues(p, {{Layer::U, 0}});
        CHECK(charge_of_tag(p, lone, B, BlockTag::B1, 0).thirds == 8);
        Prism p9(9);
        Coloring pair = with_blues(p9, {{Layer::U, 0}, {Layer::U, 2}});
        // the B1 at rung 2 absorbs rung 1; its merged left neighbour is the
        // B1 at rung 0
        CHECK(charge_of_tag(p9, pair, B, BlockTag::B1, 2).thirds == 5);
    }
    // B2: 1 with left B0, 0 otherwise
    {
        Prism p(8);
        Coloring lone = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}});
        CHECK(charge_of_tag(p, lone, B, BlockTag::B2, 0).thirds == 3);
        Coloring two = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 3}, {Layer::V, 4}});
        CHECK(charge_of_tag(p, two, B, BlockTag::B2, 3).thirds == 0);
    }
    // B3: -2/3 with left B0, -5/3 otherwise
    {
        Prism p(9);
        Coloring lone = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2}});
        CHECK(charge_of_tag(p, lone, B, BlockTag::B3, 0).thirds == -2);
        Coloring after2 =
            with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 3}, {Layer::V, 4}, {Layer::U, 5}});
        CHECK(charge_of_tag(p, after2, B, BlockTag::B3, 3).thirds == -5);
    }
}

TEST_CASE("donated leading rungs carry zero and the partition identity holds") {
    Rng rng(8080);
    for (int n : {7, 9, 12}) {
        Prism p(n);
        for (int t = 0; t < 40; ++t) {
            Coloring c = random_proper_coloring(p, rng.next(), 4, true);
            int blue = largest_class_colors(c)[0];
            auto dec = block_decompose(p, c, blue);
            if (!std::holds_alternative<BlockSequence>(dec)) continue;
            const auto& seq = std::get<BlockSequence>(dec);
            auto charges = block_charges(p, c, blue, seq);
            auto donated = donated_mask(seq);
            Charge sum;
            for (size_t i = 0; i < charges.size(); ++i) {
                sum += charges[i];
                if (donated[i]) CHECK(charges[i].thirds == 0);
            }
            CHECK(sum == total_charge(p, c, blue));
        }
    }
}

TEST_CASE("rules conserve charge on random block sequences") {
    Rng rng(12);
    for (int t = 0; t < 500; ++t) {
        int m = 2 + static_cast<int>(rng.below(9));
        BlockSequence seq{20, {}};
        int rung = 0;
        for (int i = 0; i < m; ++i) {
            BlockTag tag = static_cast<BlockTag>(rng.below(4));
            seq.blocks.push_back({tag, rung});
            rung += rung_count(tag);
        }
        std::vector<Charge> charges(m);
        long long total = 0;
        for (auto& ch : charges) {
            ch = Charge::of_thirds(static_cast<long long>(rng.below(41)) - 20);
            total += ch.thirds;
        }
        RuleResult r = apply_rules(seq, charges);
        long long after = 0;
        for (auto& ch : r.final_charges) after += ch.thirds;
        CHECK(after == total);
        // the log's net effect per block matches final - initial
        std::vector<long long> net(m, 0);
        for (const auto& tr : r.log) {
            net[tr.to] += tr.amount.thirds;
            net[tr.from] -= tr.amount.thirds;
        }
        for (int i = 0; i < m; ++i) CHECK(charges[i].thirds + net[i] == r.final_charges[i].thirds);
    }

    // all-B0 ring: everyone takes one and gives one
    BlockSequence all0{6, {}};
    for (int i = 0; i < 6; ++i) all0.blocks.push_back({BlockTag::B0, i});
    std::vector<Charge> init(6, Charge::of_thirds(10));
    RuleResult r = apply_rules(all0, init);
    for (const auto& ch : r.final_charges) CHECK(ch.thirds == 10);
}

TEST_CASE("post-rule charges match the closing table") {
    int B = 0;
    // B3 then surviving B0: final B3 = 0, B0 after B3 = 5/3
    {
        Prism p(9);
        Coloring c = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2}});
        auto dec = block_decompose(p, c, B);
        const auto& seq = std::get<BlockSequence>(dec);
        auto rules = apply_rules(seq, block_charges(p, c, B, seq));
        for (size_t i = 0; i < seq.blocks.size(); ++i) {
            if (seq.blocks[i].tag == BlockTag::B3) CHECK(rules.final_charges[i].thirds == 0);
            if (seq.blocks[i].tag == BlockTag::B0 && seq.blocks[i].start_rung == 3)
                CHECK(rules.final_charges[i].thirds == 5);  // left is the B3
            if (seq.blocks[i].tag == BlockTag::B0 && seq.blocks[i].start_rung == 4)
                CHECK(rules.final_charges[i].thirds == 10);  // left is a B0
        }
    }
    // B3 then B1: final B1 = 0; B1 elsewhere (left B0) = 5/3; B2 = 0
    {
        Prism p(9);
        Coloring c = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2}, {Layer::U, 4},
                                    {Layer::U, 6}});
        auto dec = block_decompose(p, c, B);
        REQUIRE(std::holds_alternative<BlockSequence>(dec));
        const auto& seq = std::get<BlockSequence>(dec);
        auto rules = apply_rules(seq, block_charges(p, c, B, seq));
        for (size_t i = 0; i < seq.blocks.size(); ++i) {
            if (seq.blocks[i].tag != BlockTag::B1) continue;
            if (seq.blocks[i].start_rung == 4)
                CHECK(rules.final_charges[i].thirds == 0);  // right of the B3
            if (seq.blocks[i].start_rung == 6)
                CHECK(rules.final_charges[i].thirds == 5);  // left is a B0
        }
    }
    {
        Prism p(8);
        Coloring c = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}});
        auto dec = block_decompose(p, c, B);
        const auto& seq = std::get<BlockSequence>(dec);
        auto rules = apply_rules(seq, block_charges(p, c, B, seq));
        for (size_t i = 0; i < seq.blocks.size(); ++i)
            if (seq.blocks[i].tag == BlockTag::B2) CHECK(rules.final_charges[i].thirds == 0);
    }
}

TEST_CASE("audit: oversized blue class on the 12-prism") {
    // a decomposable coloring needs one free rung per blue run, so
    // |Blue| <= 3n/4; the smallest prism where ceil(2n/3)+1 fits under that
    // cap is n = 12.  Three B3 runs: |Blue| = 9 = ceil(24/3) + 1.
    Prism p(12);
    Coloring c = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2},
                                {Layer::U, 4}, {Layer::V, 5}, {Layer::U, 6},
                                {Layer::U, 8}, {Layer::V, 9}, {Layer::U, 10}});
    AuditReport rep = audit(p, c, 0);
    CHECK(rep.blue_size == 9);
    CHECK(rep.identity_ok);
    CHECK(rep.decomposable);
    CHECK(rep.total.thirds == -15);  // 40 - 45
    CHECK(rep.conserved);
    // every B3 sits right of another B3 (impossible for lex-min colorings),
    // so rule 2 cancels out and the negative charges survive
    CHECK(rep.min_final.thirds < 0);
    std::string text = rep.serialize();
    CHECK(text.find("total = -15/3") != std::string::npos);
    CHECK(text.find("conserved = yes") != std::string::npos);
}

TEST_CASE("audit flags non-decomposable colorings") {
    Prism p(6);
    Coloring c = with_blues(p, {{Layer::U, 0}, {Layer::V, 1}, {Layer::U, 2}, {Layer::V, 3},
                                {Layer::U, 4}});
    AuditReport rep = audit(p, c, 0);
    CHECK(!rep.decomposable);
    CHECK(rep.run_length >= 4);
    CHECK(rep.serialize().find("decomposable = no") != std::string::npos);
}

TEST_CASE("audit conserves on exact lex-min colorings") {
    Prism p(6);
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        ListAssignment L = random_uniform(p, 3, 5, rng.next());
        LexminResult r = lexmin(p, L);
        AuditReport rep = audit(p, r.coloring, largest_class_colors(r.coloring)[0]);
        CHECK(rep.identity_ok);
        if (rep.decomposable) {
            CHECK(rep.conserved);
            CHECK(rep.min_final.thirds >= 0);
            CHECK(rep.total.thirds >= 0);
        }
    }
}
