#include "prismeq/prism.hpp"

namespace prismeq {

std::vector<std::vector<int>> windows(const Prism& p, int w) {
    if (w < 1 || w > p.n()) throw std::invalid_argument("window width out of range");
    std::vector<std::vector<int>> out;
    out.reserve(p.n());
    for (int s = 0; s < p.n(); ++s) {
        std::vector<int> rungs(w);
        for (int j = 0; j < w; ++j) rungs[j] = p.mod(s + j);
        out.push_back(std::move(rungs));
    }
    return out;
}

}  // namespace prismeq
