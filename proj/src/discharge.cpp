#include "prismeq/discharge.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismeq {

Charge vertex_charge(const Prism& p, const Coloring& c, int blue, int v) {
    int nb = 0;
    for (int w : p.neighbors(v)) nb += (c.color[w] == blue);
    return Charge::whole(1 - nb);
}

Charge face_charge(const Prism& p, const Coloring& c, int blue, int f) {
    if (f < 0 || f >= p.face_count()) throw std::out_of_range("face index");
    if (f >= p.n()) return Charge{};  // the two n-faces
    int nb = 0;
    for (int v : p.quad_face(f)) nb += (c.color[v] == blue);
    return Charge::of_thirds(4 - 3 * nb);
}

Charge total_charge(const Prism& p, const Coloring& c, int blue) {
    Charge sum;
    for (int v = 0; v < p.vertex_count(); ++v) sum += vertex_charge(p, c, blue, v);
    for (int f = 0; f < p.face_count(); ++f) sum += face_charge(p, c, blue, f);
    int blue_size = 0;
    for (int x : c.color) blue_size += (x == blue);
    Charge expected = Charge::of_thirds(10LL * p.n() - 15LL * blue_size);
    if (sum != expected) throw std::logic_error("charge identity violated (internal error)");
    return sum;
}

std::vector<bool> donated_mask(const BlockSequence& seq) {
    size_t m = seq.blocks.size();
    std::vector<bool> donated(m, false);
    for (size_t i = 0; i < m; ++i) {
        size_t next = (i + 1) % m;
        if (seq.blocks[i].tag == BlockTag::B0 && seq.blocks[next].tag != BlockTag::B0)
            donated[i] = true;
    }
    return donated;
}

std::vector<Charge> block_charges(const Prism& p, const Coloring& c, int blue,
                                  const BlockSequence& seq) {
    size_t m = seq.blocks.size();
    auto donated = donated_mask(seq);
    // every blue block needs a free rung to its left to absorb
    for (size_t i = 0; i < m; ++i) {
        size_t prev = (i + m - 1) % m;
        if (seq.blocks[i].tag != BlockTag::B0 && seq.blocks[prev].tag != BlockTag::B0)
            throw std::invalid_argument("invalid block sequence: blue blocks not separated by a free rung");
    }
    std::vector<Charge> out(m);
    for (size_t i = 0; i < m; ++i) {
        if (donated[i]) continue;  // booked with the block to its right
        std::vector<int> rungs;
        if (seq.blocks[i].tag != BlockTag::B0) rungs.push_back(p.mod(seq.blocks[i].start_rung - 1));
        for (int r : seq.rungs(i)) rungs.push_back(r);
        Charge sum;
        for (int r : rungs) {
            sum += vertex_charge(p, c, blue, p.id(Layer::U, r));
            sum += vertex_charge(p, c, blue, p.id(Layer::V, r));
            sum += face_charge(p, c, blue, r);  // the 4-face to the rung's right
        }
        out[i] = sum;
    }
    return out;
}

RuleResult apply_rules(const BlockSequence& seq, const std::vector<Charge>& charges) {
    size_t m = seq.blocks.size();
    if (charges.size() != m) throw std::invalid_argument("charges/sequence size mismatch");
    auto donated = donated_mask(seq);
    std::vector<size_t> actors;
    for (size_t i = 0; i < m; ++i)
        if (!donated[i]) actors.push_back(i);
    RuleResult out{charges, {}};
    if (actors.empty()) return out;
    auto right_of = [&](size_t ai) { return actors[(ai + 1) % actors.size()]; };
    for (size_t ai = 0; ai < actors.size(); ++ai) {
        size_t i = actors[ai];
        if (seq.blocks[i].tag != BlockTag::B0) continue;
        size_t j = right_of(ai);
        Charge amt = Charge::whole(1);
        out.final_charges[i] += amt;
        out.final_charges[j] -= amt;
        out.log.push_back({j, i, amt, "rule1"});
    }
    for (size_t ai = 0; ai < actors.size(); ++ai) {
        size_t i = actors[ai];
        if (seq.blocks[i].tag != BlockTag::B3) continue;
        size_t j = right_of(ai);
        Charge amt = Charge::of_thirds(5);
        out.final_charges[i] += amt;
        out.final_charges[j] -= amt;
        out.log.push_back({j, i, amt, "rule2"});
    }
    return out;
}

std::string AuditReport::serialize() const {
    std::string s;
    s += "audit v1\n";
    s += "n = " + std::to_string(n) + "\n";
    s += "blue = " + std::to_string(blue) + "\n";
    s += "blue_size = " + std::to_string(blue_size) + "\n";
    s += "total = " + total.str() + "\n";
    s += "identity = " + std::string(identity_ok ? "ok" : "VIOLATED") + "\n";
    if (!decomposable) {
        s += "decomposable = no\n";
        s += "blue_run = start " + std::to_string(run_start) + " length " +
             std::to_string(run_length) + "\n";
        return s;
    }
    s += "decomposable = yes\n";
    s += "blocks = " + blocks.tags_string() + "\n";
    auto donated = donated_mask(blocks);
    for (size_t i = 0; i < blocks.blocks.size(); ++i) {
        s += "block " + std::to_string(i) + " " + to_string(blocks.blocks[i].tag) + " rung " +
             std::to_string(blocks.blocks[i].start_rung) + " initial " + initial[i].str() +
             " final " + final_charges[i].str() + (donated[i] ? " donated" : "") + "\n";
    }
    for (const auto& t : log)
        s += "transfer " + std::string(t.rule) + " " + t.amount.str() + " from block " +
             std::to_string(t.from) + " to block " + std::to_string(t.to) + "\n";
    s += "min_final = " + min_final.str() + "\n";
    s += "conserved = " + std::string(conserved ? "yes" : "NO") + "\n";
    return s;
}

AuditReport audit(const Prism& p, const Coloring& c, int blue) {
    AuditReport rep;
    rep.n = p.n();
    rep.blue = blue;
    for (int x : c.color) rep.blue_size += (x == blue);
    rep.total = total_charge(p, c, blue);
    rep.identity_ok = true;  // total_charge throws otherwise
    auto dec = block_decompose(p, c, blue);
    if (std::holds_alternative<BlueRunTooLong>(dec)) {
        auto& run = std::get<BlueRunTooLong>(dec);
        rep.decomposable = false;
        rep.run_start = run.start_rung;
        rep.run_length = run.length;
        return rep;
    }
    rep.decomposable = true;
    rep.blocks = std::get<BlockSequence>(dec);
    rep.initial = block_charges(p, c, blue, rep.blocks);
    auto rules = apply_rules(rep.blocks, rep.initial);
    rep.final_charges = rules.final_charges;
    rep.log = std::move(rules.log);
    Charge sum_initial, sum_final;
    rep.min_final = Charge::of_thirds(1LL << 40);
    auto donated = donated_mask(rep.blocks);
    for (size_t i = 0; i < rep.blocks.blocks.size(); ++i) {
        sum_initial += rep.initial[i];
        sum_final += rep.final_charges[i];
        if (!donated[i]) rep.min_final = std::min(rep.min_final, rep.final_charges[i]);
    }
    rep.conserved = (sum_initial == rep.total) && (sum_final == rep.total);
    return rep;
}

}  // namespace prismeq
