#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>

#include "prismeq/coloring.hpp"
#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

// Recorded refutation tree for UNSAT instances (replayable without search).
// branch(v) covers every color of L(v); a leaf is either an immediate edge
// conflict for that case or a vertex whose whole list is blocked.
struct RefutationNode {
    int vertex = -1;
    struct Case {
        int color;
        int conflict_vertex = -1;             // set when the case dies immediately
        std::unique_ptr<RefutationNode> sub;  // otherwise the subtree
    };
    std::vector<Case> cases;
};

struct SolveResult {
    bool sat = false;
    Coloring coloring;                         // valid iff sat
    std::unique_ptr<RefutationNode> refutation;  // valid iff !sat and recording on
};

// Exact DFS in scan order, colors ascending; deterministic.
SolveResult solve_proper(const Prism& p, const ListAssignment& L, bool record_refutation = false);

struct UnsatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FalsifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LexminOptions {
    uint64_t node_limit = 100'000'000;
    int exact_max_n = 9;
    int improve_width = 7;  // fallback engine window width
};

struct LexminResult {
    Coloring coloring;
    ColorWord word;
    bool exact = true;
    uint64_t nodes = 0;
};

// Exact lex-min coloring by branch-and-bound while within budget; beyond it
// the improvement engine supplies a flagged-inexact result.  Ties between
// equal words resolve to the least fixed-scan serialization.
LexminResult lexmin(const Prism& p, const ListAssignment& L, const LexminOptions& opt = {});

struct EquitableResult {
    Coloring coloring;
    int bound = 0;  // ceil(2n/3)
    bool exact = true;
};

// k must be 3.  Exact mode = lexmin; a bounded result must exist, so an
// exhausted exact search without one aborts loudly (FalsifiedError).
EquitableResult equitable_coloring(const Prism& p, const ListAssignment& L,
                                   const LexminOptions& opt = {});

// Brute-force oracle: yields every proper list-respecting coloring exactly
// once (scan order, colors ascending).  Return false from the callback to
// stop early.  Budget: n <= 7.
void all_proper_colorings(const Prism& p, const ListAssignment& L,
                          const std::function<bool(const Coloring&)>& fn);

// Exact maximum independent set size, <= 24 vertices.
int independence_number(const std::vector<std::vector<int>>& adjacency);
std::vector<std::vector<int>> adjacency_list(const Prism& p);

}  // namespace prismeq
