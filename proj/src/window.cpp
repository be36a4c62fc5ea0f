#include "prismeq/window.hpp"

#include <algorithm>

namespace prismeq {

namespace {

struct WindowSearch {
    const Prism& p;
    const ListAssignment& L;
    Coloring work;
    std::vector<int> verts;         // window vertices in scan order
    std::vector<char> in_window;    // by vertex id
    std::vector<int> counts_key;    // color -> dense index
    std::vector<int> counts;
    ColorWord base;
    bool have_best = false;
    ColorWord best_word;
    Coloring best;

    WindowSearch(const Prism& p_, const ListAssignment& L_, const Coloring& c)
        : p(p_), L(L_), work(c), in_window(p_.vertex_count(), 0), base(color_word(c)) {}

    void set_window(const std::vector<int>& rungs) {
        std::fill(in_window.begin(), in_window.end(), 0);
        verts.clear();
        for (int i : rungs) {
            verts.push_back(p.id(Layer::U, i));
            verts.push_back(p.id(Layer::V, i));
        }
        std::sort(verts.begin(), verts.end());
        for (int v : verts) in_window[v] = 1;
    }

    void dfs(const Coloring& orig, size_t at, std::map<int, int>& sizes) {
        if (at == verts.size()) {
            ColorWord w;
            for (auto& [color, count] : sizes)
                if (count > 0) w.sizes.push_back(count);
            std::sort(w.sizes.begin(), w.sizes.end(), std::greater<int>());
            if (compare(w, base) >= 0) return;
            if (!have_best || compare(w, best_word) < 0 ||
                (compare(w, best_word) == 0 && work.color < best.color)) {
                have_best = true;
                best_word = w;
                best = work;
            }
            return;
        }
        int v = verts[at];
        for (int x : L.lists[v]) {
            bool ok = true;
            for (int nb : p.neighbors(v)) {
                // window vertices later in scan order are still undecided
                if (in_window[nb] && nb > v) continue;
                if (work.color[nb] == x) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int old = work.color[v];
            work.color[v] = x;
            --sizes[old];
            ++sizes[x];
            dfs(orig, at + 1, sizes);
            --sizes[x];
            ++sizes[old];
            work.color[v] = old;
        }
    }
};

}  // namespace

std::optional<Coloring> window_improve(const Prism& p, const ListAssignment& L, const Coloring& c,
                                       int w) {
    if (w < 1 || w > p.n()) throw std::invalid_argument("window width out of range");
    WindowSearch search(p, L, c);
    auto sizes = class_sizes(c);
    int span = (w == p.n()) ? 1 : p.n();  // full-width windows are all identical
    for (int s = 0; s < span; ++s) {
        std::vector<int> rungs(w);
        for (int j = 0; j < w; ++j) rungs[j] = p.mod(s + j);
        search.set_window(rungs);
        auto local = sizes;
        search.dfs(c, 0, local);
    }
    if (!search.have_best) return std::nullopt;
    return search.best;
}

std::optional<Coloring> window_improve_at(const Prism& p, const ListAssignment& L,
                                          const Coloring& c, const std::vector<int>& rungs) {
    WindowSearch search(p, L, c);
    search.set_window(rungs);
    auto sizes = class_sizes(c);
    search.dfs(c, 0, sizes);
    if (!search.have_best) return std::nullopt;
    return search.best;
}

Coloring improve_to_local_min(const Prism& p, const ListAssignment& L, const Coloring& c,
                              int w_max) {
    Coloring cur = c;
    int cap = std::min(w_max, p.n());
    int w = 1;
    while (w <= cap) {
        if (auto better = window_improve(p, L, cur, w)) {
            cur = std::move(*better);
            w = 1;  // words strictly decrease, so this terminates
        } else {
            ++w;
        }
    }
    return cur;
}

}  // namespace prismeq
