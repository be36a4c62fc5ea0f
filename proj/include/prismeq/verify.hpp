#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prismeq/certificates.hpp"
#include "prismeq/solver.hpp"

namespace prismeq {

struct CampaignConfig {
    int n_lo = 3, n_hi = 3;
    enum class Mode { Exhaustive, Sample } mode = Mode::Sample;
    long samples = 1000;
    int universe = 6;
    uint64_t seed = 1;
    int jobs = 1;
    uint64_t node_limit = 100'000'000;
};

// Deterministic parallel map over indexed work items; the aggregate is
// order-insensitive, so any --jobs produces the serial result.
void parallel_for(long count, int jobs, const std::function<void(long)>& body);

struct ChoiceVerification {
    int n = 0;
    Certificate unsat_cert;
    Certificate sat_cert;
    bool ok = false;
    std::string detail;
};

// (a) UNSAT certificate for the adversarial 2-list assignment (identical
// {r,b} lists when n odd, the frozen gadget when n even); (b) SAT certificate
// for identical 3-lists.  Together: ch = 3.
ChoiceVerification verify_choice_number(int n);

struct EquitableReport {
    int n = 0;
    bool exhaustive = false;
    long checked = 0;       // assignments verified
    long orbit_count = 0;   // canonical representatives (exhaustive mode)
    int universe_cap = 0;
    int bound = 0;
    int max_class_seen = 0;
    long failures = 0;
    std::string failure_witness;  // serialized offending assignment, if any
    std::string to_text(bool machine) const;
};

EquitableReport verify_equitable(const CampaignConfig& config, int n);

struct LemmaCheck {
    std::string name;
    bool ok = false;
    long cases = 0;
    std::string detail;
};

struct LemmaSuiteReport {
    int n = 0;
    std::vector<LemmaCheck> checks;
    bool all_ok() const;
    std::string to_text(bool machine) const;
};

// (1) lex-min colorings using < 4 colors are ceil(2n/3)-bounded; (2) move
// soundness fixtures for F1..F8 (and the P4 cases when n == 4); (3) the
// 6-rung window counting identity; (4) block decomposition existence on
// exact lex-min colorings; (5) discharging audit conservation and the
// block-charge table.  self_test injects a broken fixture and expects the
// harness to flag it.
LemmaSuiteReport verify_lemma_suite(int n, long samples, uint64_t seed, int jobs = 1,
                                    bool self_test = false);

// Canonical (symmetry- and renaming-reduced) exhaustive enumeration of
// 3-uniform assignments over a capped universe; calls fn once per orbit
// representative.  Returns the orbit count.
long for_each_canonical_assignment(const Prism& p, int universe_cap,
                                   const std::function<void(const ListAssignment&)>& fn);

}  // namespace prismeq
