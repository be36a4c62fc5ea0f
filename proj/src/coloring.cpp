#include "prismeq/coloring.hpp"

#include <algorithm>

namespace prismeq {

bool is_proper(const Prism& p, const Coloring& c) {
    for (int i = 0; i < p.n(); ++i) {
        int u = p.id(Layer::U, i), v = p.id(Layer::V, i);
        if (c.color[u] == c.color[v]) return false;
        if (c.color[u] == c.color[p.id(Layer::U, i + 1)]) return false;
        if (c.color[v] == c.color[p.id(Layer::V, i + 1)]) return false;
    }
    return true;
}

bool respects_lists(const ListAssignment& L, const Coloring& c) {
    for (size_t v = 0; v < c.color.size(); ++v)
        if (!L.contains(static_cast<int>(v), c.color[v])) return false;
    return true;
}

std::map<int, int> class_sizes(const Coloring& c) {
    std::map<int, int> m;
    for (int x : c.color) ++m[x];
    return m;
}

std::string ColorWord::to_string() const {
    std::string s = "";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(sizes[i]);
    }
    return s;
}

ColorWord color_word(const Coloring& c) {
    ColorWord w;
    for (auto& [color, count] : class_sizes(c)) w.sizes.push_back(count);
    std::sort(w.sizes.begin(), w.sizes.end(), std::greater<int>());
    return w;
}

int compare(const ColorWord& a, const ColorWord& b) {
    size_t len = std::max(a.sizes.size(), b.sizes.size());
    for (size_t i = 0; i < len; ++i) {
        int x = i < a.sizes.size() ? a.sizes[i] : 0;
        int y = i < b.sizes.size() ? b.sizes[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

Coloring apply_map(const Prism& p, const VertexMap& sigma, const Coloring& c) {
    Coloring out{std::vector<int>(c.color.size())};
    for (int v = 0; v < p.vertex_count(); ++v) out.color[sigma.apply(p, v)] = c.color[v];
    return out;
}

std::vector<int> largest_class_colors(const Coloring& c) {
    auto sizes = class_sizes(c);
    int best = 0;
    for (auto& [color, count] : sizes) best = std::max(best, count);
    std::vector<int> out;
    for (auto& [color, count] : sizes)
        if (count == best) out.push_back(color);
    return out;
}

std::vector<int> second_class_colors(const Coloring& c, int blue) {
    auto sizes = class_sizes(c);
    int best = 0;
    for (auto& [color, count] : sizes)
        if (color != blue) best = std::max(best, count);
    std::vector<int> out;
    for (auto& [color, count] : sizes)
        if (color != blue && count == best) out.push_back(color);
    return out;
}

}  // namespace prismeq
