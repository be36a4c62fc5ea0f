#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace prismeq {

enum class Layer : int { U = 0, V = 1 };

inline Layer other(Layer l) { return l == Layer::U ? Layer::V : Layer::U; }

// The prism graph: two n-cycles (layers U and V) joined by n rungs.
// Vertex ids follow the scan order (U,0),(V,0),(U,1),(V,1),...  so
// id(U,i) = 2i and id(V,i) = 2i+1.  All indices are taken mod n.
class Prism {
public:
    explicit Prism(int n) : n_(n) {
        if (n < 3) throw std::invalid_argument("prism requires n >= 3");
    }

    int n() const { return n_; }
    int vertex_count() const { return 2 * n_; }
    int edge_count() const { return 3 * n_; }
    int face_count() const { return n_ + 2; }

    int mod(int i) const { return ((i % n_) + n_) % n_; }

    int id(Layer l, int i) const { return 2 * mod(i) + static_cast<int>(l); }
    Layer layer(int v) const { return static_cast<Layer>(v & 1); }
    int index(int v) const { return v / 2; }

    // cycle predecessor, cycle successor, rung partner
    std::array<int, 3> neighbors(int v) const {
        Layer l = layer(v);
        int i = index(v);
        return {id(l, i - 1), id(l, i + 1), id(other(l), i)};
    }

    bool adjacent(int a, int b) const {
        if (a == b) return false;
        for (int w : neighbors(a))
            if (w == b) return true;
        return false;
    }

    // Faces: 0..n-1 are the 4-faces (face i lies between rungs i and i+1),
    // face n is the U-layer n-face, face n+1 the V-layer n-face.
    std::array<int, 4> quad_face(int f) const {
        if (f < 0 || f >= n_) throw std::out_of_range("quad face index");
        return {id(Layer::U, f), id(Layer::V, f), id(Layer::U, f + 1), id(Layer::V, f + 1)};
    }

    bool bipartite() const { return n_ % 2 == 0; }
    int girth() const { return n_ == 3 ? 3 : 4; }

    std::string vertex_name(int v) const {
        return (layer(v) == Layer::U ? "U" : "V") + std::to_string(index(v));
    }

private:
    int n_;
};

inline Prism build_prism(int n) { return Prism(n); }

// Cyclic windows of w consecutive rungs; windows(p, w)[s] starts at rung s.
std::vector<std::vector<int>> windows(const Prism& p, int w);

}  // namespace prismeq
