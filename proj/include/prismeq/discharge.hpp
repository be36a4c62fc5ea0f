#pragma once

#include <string>
#include <vector>

#include "prismeq/blocks.hpp"
#include "prismeq/coloring.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

// Exact integer-thirds arithmetic; every charge in the argument is a multiple
// of 1/3 and desk-scale sums stay far from overflow.
struct Charge {
    long long thirds = 0;

    static Charge of_thirds(long long t) { return Charge{t}; }
    static Charge whole(long long w) { return Charge{3 * w}; }

    Charge operator+(Charge o) const { return Charge{thirds + o.thirds}; }
    Charge operator-(Charge o) const { return Charge{thirds - o.thirds}; }
    Charge& operator+=(Charge o) { thirds += o.thirds; return *this; }
    Charge& operator-=(Charge o) { thirds -= o.thirds; return *this; }
    auto operator<=>(const Charge&) const = default;

    std::string str() const { return std::to_string(thirds) + "/3"; }
};

// chg(v) = 1 - |blue neighbours of v|
Charge vertex_charge(const Prism& p, const Coloring& c, int blue, int v);
// 4-faces: 4/3 - |blue vertices on f|; n-faces (f = n, n+1): 0
Charge face_charge(const Prism& p, const Coloring& c, int blue, int f);
// sum over vertices and faces; checked against 10n/3 - 5|Blue| (a mismatch is
// an internal error, not an input error)
Charge total_charge(const Prism& p, const Coloring& c, int blue);

// Per-block charges under the reconciled attribution: every B1/B2/B3 absorbs
// the free rung immediately to its left plus that rung's 4-face; a B0 that
// donated itself that way carries exactly 0.  Sum equals total_charge.
std::vector<Charge> block_charges(const Prism& p, const Coloring& c, int blue,
                                  const BlockSequence& seq);

// True for B0 blocks absorbed as the leading rung of the following block.
std::vector<bool> donated_mask(const BlockSequence& seq);

struct Transfer {
    size_t from;  // block index losing charge
    size_t to;    // block index gaining charge
    Charge amount;
    const char* rule;
};

struct RuleResult {
    std::vector<Charge> final_charges;
    std::vector<Transfer> log;
};

// Rule 1: every (non-donated) B0 steals +1 from the block to its right.
// Rule 2: every B3 steals +5/3 from the block to its right.  Donated B0s are
// part of their block and neither steal nor get stolen from.  Total charge is
// preserved exactly.
RuleResult apply_rules(const BlockSequence& seq, const std::vector<Charge>& charges);

struct AuditReport {
    int n = 0;
    int blue = -1;
    int blue_size = 0;
    bool decomposable = false;
    int run_start = 0, run_length = 0;  // when not decomposable
    Charge total;
    bool identity_ok = false;
    BlockSequence blocks;
    std::vector<Charge> initial;
    std::vector<Charge> final_charges;
    std::vector<Transfer> log;
    Charge min_final;
    bool conserved = false;

    std::string serialize() const;  // flat text, machine-readable, exact p/3
};

AuditReport audit(const Prism& p, const Coloring& c, int blue);

}  // namespace prismeq
