#include "prismeq/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "prismeq/io.hpp"

namespace prismeq {

namespace {

// One flattened candidate: renamed lists in scan order, each sorted.
using Flat = std::vector<std::vector<int>>;

int flat_compare(const Flat& a, const Flat& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// DFS over fresh-id orderings; first-occurrence relabeling with ties inside a
// single list explored both ways so the minimum is exact.  When `stop_below`
// is set the search aborts as soon as any candidate beats the incumbent.
void renaming_dfs(const std::vector<const std::vector<int>*>& lists, size_t at,
                  std::map<int, int>& rename, int next_id, Flat& acc, std::optional<Flat>& best,
                  bool* stop_below = nullptr) {
    if (stop_below && *stop_below) return;
    if (at == lists.size()) {
        if (!best || flat_compare(acc, *best) < 0) {
            if (stop_below && best) {
                *stop_below = true;
                return;
            }
            best = acc;
        }
        return;
    }
    const auto& raw = *lists[at];
    std::vector<int> known;
    std::vector<int> fresh;
    for (int c : raw) {
        auto it = rename.find(c);
        if (it != rename.end())
            known.push_back(it->second);
        else
            fresh.push_back(c);
    }
    std::sort(known.begin(), known.end());
    // the renamed list itself does not depend on which fresh color takes
    // which id, so we can prune against the incumbent before branching
    std::vector<int> renamed = known;
    for (size_t j = 0; j < fresh.size(); ++j) renamed.push_back(next_id + static_cast<int>(j));
    std::sort(renamed.begin(), renamed.end());
    if (best && at < best->size()) {
        const auto& ref = (*best)[at];
        if (renamed > ref) {
            // acc[0..at) already equals best prefix or is smaller; only equal
            // prefixes can reach here with a larger entry, so cut
            bool prefix_equal = true;
            for (size_t i = 0; i < at; ++i)
                if (acc[i] != (*best)[i]) {
                    prefix_equal = false;
                    break;
                }
            if (prefix_equal) return;
        }
    }
    acc.push_back(renamed);
    std::sort(fresh.begin(), fresh.end());
    do {
        for (size_t j = 0; j < fresh.size(); ++j) rename[fresh[j]] = next_id + static_cast<int>(j);
        renaming_dfs(lists, at + 1, rename, next_id + static_cast<int>(fresh.size()), acc, best,
                     stop_below);
        for (int c : fresh) rename.erase(c);
        if (stop_below && *stop_below) break;
    } while (std::next_permutation(fresh.begin(), fresh.end()));
    acc.pop_back();
}

}  // namespace

std::string canonical_form(const Prism& p, const ListAssignment& L) {
    std::optional<Flat> best;
    for (const VertexMap& sigma : automorphism_group(p)) {
        // permuted: lists read through sigma^-1 in scan order
        VertexMap inv = sigma.inverse();
        std::vector<const std::vector<int>*> lists(p.vertex_count());
        for (int v = 0; v < p.vertex_count(); ++v) lists[v] = &L.lists[inv.apply(p, v)];
        std::map<int, int> rename;
        Flat acc;
        renaming_dfs(lists, 0, rename, 0, acc, best);
    }
    ListAssignment canon{L.n, L.k, *best};
    return serialize_assignment(p, canon);
}

namespace {

// true iff fresh colors appear as consecutive next ids along the scan, i.e.
// the assignment is its own first-occurrence relabeling
bool is_first_occurrence_form(const Flat& lists) {
    std::vector<char> seen;
    int next_id = 0;
    for (const auto& l : lists) {
        std::vector<int> fresh;
        for (int c : l) {
            if (c < 0) return false;
            if (c >= static_cast<int>(seen.size()) || !seen[c]) fresh.push_back(c);
        }
        std::sort(fresh.begin(), fresh.end());
        for (int c : fresh) {
            if (c != next_id) return false;
            ++next_id;
            if (c >= static_cast<int>(seen.size())) seen.resize(c + 1, 0);
            seen[c] = 1;
        }
    }
    return true;
}

}  // namespace

bool is_canonical_representative(const Prism& p, const ListAssignment& L) {
    Flat self(L.lists.begin(), L.lists.end());
    if (!is_first_occurrence_form(self)) return false;
    for (const VertexMap& sigma : automorphism_group(p)) {
        VertexMap inv = sigma.inverse();
        std::vector<const std::vector<int>*> lists(p.vertex_count());
        for (int v = 0; v < p.vertex_count(); ++v) lists[v] = &L.lists[inv.apply(p, v)];
        std::map<int, int> rename;
        Flat acc;
        std::optional<Flat> best = self;
        bool stop = false;
        renaming_dfs(lists, 0, rename, 0, acc, best, &stop);
        if (stop) return false;  // some relabeled image is strictly smaller
    }
    return true;
}

}  // namespace prismeq
