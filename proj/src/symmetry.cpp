#include "prismeq/symmetry.hpp"

namespace prismeq {

VertexMap VertexMap::compose(const VertexMap& b) const {
    // this maps i -> r1 + s1*i, b maps i -> r2 + s2*i  (s = +-1 for reflect)
    int s1 = reflect ? -1 : 1;
    VertexMap out;
    out.n = n;
    out.rot = ((rot + s1 * b.rot) % n + n) % n;
    out.reflect = (reflect != b.reflect);
    out.swap_layers = (swap_layers != b.swap_layers);
    return out;
}

VertexMap VertexMap::inverse() const {
    VertexMap out;
    out.n = n;
    out.reflect = reflect;
    out.swap_layers = swap_layers;
    out.rot = reflect ? rot : ((n - rot) % n);
    return out;
}

std::string VertexMap::kind() const {
    std::string s = "rotation(" + std::to_string(rot) + ")";
    if (reflect) s += "*reflection";
    if (swap_layers) s += "*layer-swap";
    return s;
}

std::vector<VertexMap> automorphism_group(const Prism& p) {
    std::vector<VertexMap> out;
    out.reserve(4 * p.n());
    for (int sw = 0; sw < 2; ++sw)
        for (int rf = 0; rf < 2; ++rf)
            for (int t = 0; t < p.n(); ++t)
                out.push_back(VertexMap{p.n(), t, rf != 0, sw != 0});
    return out;
}

}  // namespace prismeq
