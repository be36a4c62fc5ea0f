#include "prismeq/lists.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "prismeq/rng.hpp"

namespace prismeq {

bool ListAssignment::contains(int v, int c) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

std::vector<int> ListAssignment::universe() const {
    std::set<int> s;
    for (const auto& l : lists) s.insert(l.begin(), l.end());
    return {s.begin(), s.end()};
}

void ListAssignment::validate() const {
    if (k <= 0) throw std::invalid_argument("list size k must be positive");
    if (static_cast<int>(lists.size()) != 2 * n) throw std::invalid_argument("wrong vertex count");
    for (const auto& l : lists) {
        if (static_cast<int>(l.size()) != k) throw std::invalid_argument("assignment not k-uniform");
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] < 0) throw std::invalid_argument("negative color id");
            if (i > 0 && l[i] <= l[i - 1]) throw std::invalid_argument("list not sorted/distinct");
        }
    }
}

ListAssignment uniform_assignment(const Prism& p, const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ListAssignment L{p.n(), static_cast<int>(sorted.size()),
                     std::vector<std::vector<int>>(p.vertex_count(), sorted)};
    L.validate();
    return L;
}

ListAssignment random_uniform(const Prism& p, int k, int universe_size, uint64_t seed) {
    if (universe_size < k) throw std::invalid_argument("universe smaller than list size");
    Rng rng(derive_seed(seed, 0x6c69737473ULL, static_cast<uint64_t>(p.n())));
    ListAssignment L{p.n(), k, {}};
    L.lists.reserve(p.vertex_count());
    std::vector<int> pool(universe_size);
    for (int v = 0; v < p.vertex_count(); ++v) {
        for (int i = 0; i < universe_size; ++i) pool[i] = i;
        // partial Fisher-Yates: first k entries become the list
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(rng.below(universe_size - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> list(pool.begin(), pool.begin() + k);
        std::sort(list.begin(), list.end());
        L.lists.push_back(std::move(list));
    }
    L.validate();
    return L;
}

ListAssignment apply_map(const Prism& p, const VertexMap& sigma, const ListAssignment& L) {
    ListAssignment out{L.n, L.k, std::vector<std::vector<int>>(L.lists.size())};
    for (int v = 0; v < p.vertex_count(); ++v) out.lists[sigma.apply(p, v)] = L.lists[v];
    return out;
}

}  // namespace prismeq
