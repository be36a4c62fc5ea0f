#pragma once

#include <string>

#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

// Canonical key for a list assignment under the 4n-map group x color
// renaming.  The key is the lexicographically least serialization over all
// group elements after first-occurrence color relabeling (ties inside one
// list branch over both fresh-id orders, so the minimum is exact).  Two
// assignments get equal keys iff they lie in the same orbit.
std::string canonical_form(const Prism& p, const ListAssignment& L);

// True iff serialize_assignment(p, L) == canonical_form(p, L).
bool is_canonical_representative(const Prism& p, const ListAssignment& L);

}  // namespace prismeq
