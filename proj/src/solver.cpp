#include "prismeq/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "prismeq/window.hpp"

namespace prismeq {

namespace {

// neighbors with a smaller scan id, i.e. already assigned during a scan-order
// sweep
std::vector<std::vector<int>> prior_neighbors(const Prism& p) {
    std::vector<std::vector<int>> prior(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int w : p.neighbors(v))
            if (w < v) prior[v].push_back(w);
    return prior;
}

struct DfsEnv {
    const Prism& p;
    const ListAssignment& L;
    std::vector<std::vector<int>> prior;
    std::vector<int> assign;

    DfsEnv(const Prism& p_, const ListAssignment& L_)
        : p(p_), L(L_), prior(prior_neighbors(p_)), assign(p_.vertex_count(), -1) {}

    bool allowed(int v, int c) const {
        for (int w : prior[v])
            if (assign[w] == c) return false;
        return true;
    }
};

bool dfs_first(DfsEnv& env, int v) {
    if (v == env.p.vertex_count()) return true;
    for (int c : env.L.lists[v]) {
        if (!env.allowed(v, c)) continue;
        env.assign[v] = c;
        if (dfs_first(env, v + 1)) return true;
        env.assign[v] = -1;
    }
    return false;
}

std::unique_ptr<RefutationNode> dfs_refute(DfsEnv& env, int v) {
    auto node = std::make_unique<RefutationNode>();
    node->vertex = v;
    for (int c : env.L.lists[v]) {
        RefutationNode::Case cs;
        cs.color = c;
        int conflict = -1;
        for (int w : env.prior[v])
            if (env.assign[w] == c) {
                conflict = w;
                break;
            }
        if (conflict >= 0) {
            cs.conflict_vertex = conflict;
        } else {
            env.assign[v] = c;
            cs.sub = dfs_refute(env, v + 1);
            env.assign[v] = -1;
        }
        node->cases.push_back(std::move(cs));
    }
    return node;
}

}  // namespace

SolveResult solve_proper(const Prism& p, const ListAssignment& L, bool record_refutation) {
    L.validate();
    DfsEnv env(p, L);
    SolveResult out;
    if (dfs_first(env, 0)) {
        out.sat = true;
        out.coloring = Coloring{env.assign};
        return out;
    }
    out.sat = false;
    if (record_refutation) {
        std::fill(env.assign.begin(), env.assign.end(), -1);
        out.refutation = dfs_refute(env, 0);
    }
    return out;
}

void all_proper_colorings(const Prism& p, const ListAssignment& L,
                          const std::function<bool(const Coloring&)>& fn) {
    if (p.n() > 7) throw BudgetError("all_proper_colorings budgeted for n <= 7");
    L.validate();
    DfsEnv env(p, L);
    bool stop = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == p.vertex_count()) {
            if (!fn(Coloring{env.assign})) stop = true;
            return;
        }
        for (int c : L.lists[v]) {
            if (!env.allowed(v, c)) continue;
            env.assign[v] = c;
            self(self, v + 1);
            env.assign[v] = -1;
            if (stop) return;
        }
    };
    rec(rec, 0);
}

namespace {

// Branch-and-bound state for exact lex-min search over dense color ids.
struct LexminSearch {
    const Prism& p;
    std::vector<std::vector<int>> lists;  // dense ids
    std::vector<std::vector<int>> prior;
    int m;        // universe size
    int lift;     // ceil(2n/m): no completion's largest class can be smaller
    uint64_t node_limit;
    uint64_t nodes = 0;
    std::vector<int> assign;
    std::vector<int> counts;
    bool found = false;
    std::vector<int> best_word;    // descending, trailing zeros trimmed
    std::vector<int> best_assign;  // serialization tie-break
    std::vector<int> scratch;

    LexminSearch(const Prism& p_, const ListAssignment& L, uint64_t limit)
        : p(p_), prior(prior_neighbors(p_)), node_limit(limit) {
        auto uni = L.universe();
        m = static_cast<int>(uni.size());
        lift = (p.vertex_count() + m - 1) / m;
        lists.resize(p.vertex_count());
        for (int v = 0; v < p.vertex_count(); ++v)
            for (int c : L.lists[v])
                lists[v].push_back(static_cast<int>(
                    std::lower_bound(uni.begin(), uni.end(), c) - uni.begin()));
        assign.assign(p.vertex_count(), -1);
        counts.assign(m, 0);
        scratch.reserve(m);
        dense_to_color = uni;
    }

    std::vector<int> dense_to_color;

    // -1/0/1 against best_word, zero-padded
    int cmp_words(const std::vector<int>& w) const {
        size_t len = std::max(w.size(), best_word.size());
        for (size_t i = 0; i < len; ++i) {
            int x = i < w.size() ? w[i] : 0;
            int y = i < best_word.size() ? best_word[i] : 0;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    // optimistic completion word: current counts desc, first entry lifted
    int optimistic_cmp() {
        scratch.clear();
        for (int c = 0; c < m; ++c)
            if (counts[c] > 0) scratch.push_back(counts[c]);
        std::sort(scratch.begin(), scratch.end(), std::greater<int>());
        if (scratch.empty())
            scratch.push_back(lift);
        else
            scratch[0] = std::max(scratch[0], lift);
        return cmp_words(scratch);
    }

    // compare assigned prefix [0, len) with best_assign; only meaningful when
    // words tie
    int prefix_cmp(int len) const {
        for (int i = 0; i < len; ++i)
            if (assign[i] != best_assign[i]) return assign[i] < best_assign[i] ? -1 : 1;
        return 0;
    }

    void dfs(int v) {
        if (++nodes > node_limit) throw BudgetError("lexmin node budget exceeded");
        if (v == p.vertex_count()) {
            scratch.clear();
            for (int c = 0; c < m; ++c)
                if (counts[c] > 0) scratch.push_back(counts[c]);
            std::sort(scratch.begin(), scratch.end(), std::greater<int>());
            int cmp = found ? cmp_words(scratch) : -1;
            if (cmp < 0 || (cmp == 0 && prefix_cmp(v) < 0)) {
                best_word = scratch;
                best_assign = assign;
                found = true;
            }
            return;
        }
        // candidates ordered by (current class size, color): greedy toward
        // small words, deterministic
        scratch.clear();
        auto& cand = lists[v];
        std::array<int, 8> order{};
        int nc = 0;
        for (int c : cand) {
            bool ok = true;
            for (int w : prior[v])
                if (assign[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) order[nc++] = c;
        }
        std::sort(order.begin(), order.begin() + nc,
                  [&](int a, int b) { return counts[a] != counts[b] ? counts[a] < counts[b] : a < b; });
        for (int i = 0; i < nc; ++i) {
            int c = order[i];
            assign[v] = c;
            ++counts[c];
            if (!found) {
                dfs(v + 1);
            } else {
                int cmp = optimistic_cmp();
                if (cmp < 0 || (cmp == 0 && prefix_cmp(v + 1) <= 0)) dfs(v + 1);
            }
            --counts[c];
            assign[v] = -1;
        }
    }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

LexminResult lexmin(const Prism& p, const ListAssignment& L, const LexminOptions& opt) {
    L.validate();
    LexminResult out;
    if (p.n() <= opt.exact_max_n) {
        LexminSearch search(p, L, opt.node_limit);
        bool budget_hit = false;
        try {
            search.dfs(0);
        } catch (const BudgetError&) {
            budget_hit = true;
        }
        out.nodes = search.nodes;
        if (!budget_hit) {
            if (!search.found) throw UnsatError("assignment admits no proper coloring");
            Coloring c{std::vector<int>(p.vertex_count())};
            for (int v = 0; v < p.vertex_count(); ++v)
                c.color[v] = search.dense_to_color[search.best_assign[v]];
            out.coloring = std::move(c);
            out.word = color_word(out.coloring);
            out.exact = true;
            return out;
        }
    }
    // out of exact budget: improvement engine (flagged inexact)
    SolveResult base = solve_proper(p, L);
    if (!base.sat) throw UnsatError("assignment admits no proper coloring");
    out.coloring = improve_to_local_min(p, L, base.coloring, opt.improve_width);
    out.word = color_word(out.coloring);
    out.exact = false;
    return out;
}

EquitableResult equitable_coloring(const Prism& p, const ListAssignment& L,
                                   const LexminOptions& opt) {
    if (L.k != 3) throw std::invalid_argument("equitable_coloring supports k = 3 only");
    EquitableResult out;
    out.bound = ceil_div(2 * p.n(), 3);
    LexminResult r = lexmin(p, L, opt);
    out.coloring = r.coloring;
    out.exact = r.exact;
    int largest = r.word.sizes.empty() ? 0 : r.word.sizes[0];
    if (largest > out.bound) {
        if (r.exact)
            throw FalsifiedError("exact lex-min coloring exceeds ceil(2n/3) = " +
                                 std::to_string(out.bound) + " on n = " + std::to_string(p.n()));
        // inexact engine may be stuck in a local minimum; report via exception
        // as well, callers treat it as a budget problem, not a refutation
        throw BudgetError("inexact improvement did not reach the equitable bound");
    }
    return out;
}

int independence_number(const std::vector<std::vector<int>>& adjacency) {
    int n = static_cast<int>(adjacency.size());
    if (n > 24) throw BudgetError("independence_number budgeted for <= 24 vertices");
    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : adjacency[v]) {
            if (w < 0 || w >= n) throw std::invalid_argument("adjacency index out of range");
            nbr[v] |= 1u << w;
        }
    int best = 0;
    auto rec = [&](auto&& self, uint32_t cand, int size) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        // include v
        self(self, cand & ~(nbr[v] | (1u << v)), size + 1);
        // exclude v
        self(self, cand & ~(1u << v), size);
    };
    rec(rec, n == 32 ? ~0u : ((1u << n) - 1), 0);
    return best;
}

std::vector<std::vector<int>> adjacency_list(const Prism& p) {
    std::vector<std::vector<int>> adj(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) {
        auto nb = p.neighbors(v);
        adj[v] = {nb.begin(), nb.end()};
    }
    return adj;
}

}  // namespace prismeq
