#pragma once

#include <optional>
#include <string>

#include "prismeq/solver.hpp"

namespace prismeq {

// Self-contained re-checkable claims.  A SAT certificate carries the
// assignment, the coloring and (for equitable claims) the bound; an UNSAT
// certificate carries the assignment plus a branch/case refutation tree that
// the checker replays by direct propagation, never by search.
struct Certificate {
    std::string claim;    // e.g. CH3-UNSAT-ODD, CH3-SAT, EQUITABLE-N6
    int version = 1;
    Prism prism{3};
    ListAssignment lists;
    std::optional<Coloring> coloring;  // SAT witness
    std::optional<int> bound;          // class-size bound the witness must meet
    std::string refutation;            // UNSAT trace (serialized), empty for SAT
    bool unsat = false;

    std::string serialize() const;
};

Certificate parse_certificate(const std::string& text);

std::string serialize_refutation(const RefutationNode& node, const Prism& p);

struct CheckResult {
    bool ok = false;
    std::string detail;
};

// Validates without re-running any search: properness, list-respect, bound,
// and UNSAT trees re-verified by propagation (every branch covers the whole
// list; every leaf is a genuine conflict).
CheckResult check_certificate(const Certificate& cert);
CheckResult check_certificate_text(const std::string& text);

Certificate make_sat_certificate(const std::string& claim, const Prism& p,
                                 const ListAssignment& L, const Coloring& c,
                                 std::optional<int> bound = std::nullopt);
Certificate make_unsat_certificate(const std::string& claim, const Prism& p,
                                   const ListAssignment& L, const RefutationNode& refutation);

}  // namespace prismeq
