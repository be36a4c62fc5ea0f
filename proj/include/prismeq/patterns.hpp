#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prismeq/coloring.hpp"
#include "prismeq/prism.hpp"
#include "prismeq/symmetry.hpp"

namespace prismeq {

// Cell constraints reference roles, not concrete colors; roles bind to actual
// colors at match time.  Binding domains: "largest" (a largest class),
// "secondlargest" (a largest class among the rest), "any" (any class).  Role
// bindings are injective.
enum class CellKind { MustBeRole, MustNotBeRole, Free };

struct Cell {
    Layer layer;
    int offset;  // rung offset within the window, 0-based
    CellKind kind = CellKind::Free;
    std::string role;
};

enum class RoleDomain { Largest, SecondLargest, Any };

struct Pattern {
    std::string name;
    int width = 0;
    std::vector<Cell> cells;
    std::vector<std::pair<std::string, RoleDomain>> roles;  // declaration order
    std::vector<std::string> guards;                        // informational

    const Cell* cell_at(Layer l, int offset) const;
};

// Pattern file grammar (docs/formats.md):
//   config F1 width=3
//   role blue = largest
//   cell U1 = blue
//   cell V1 = notblue
//   guard <free text>
//   end
std::vector<Pattern> parse_patterns(std::istream& in);
std::vector<Pattern> parse_patterns(const std::string& text);

// The shipped configuration set (F1-F8, P4C1-P4C5, W6C1-W6C5), identical to
// data/configs.txt.
const std::vector<Pattern>& builtin_patterns();
const Pattern& builtin_pattern(const std::string& name);
std::string builtin_patterns_text();

struct Placement {
    VertexMap sigma;                  // window cell (l, j) sits at sigma(id(l, j))
    std::map<std::string, int> bind;  // role -> concrete color

    int vertex(const Prism& p, Layer l, int offset) const {
        return sigma.apply(p, p.id(l, offset));
    }
};

// All placements over the 4n maps where the hard cell constraints hold,
// with role-to-color bindings reported.  List-condition guards are not
// evaluated here; they belong to move time.
std::vector<Placement> find_matches(const Prism& p, const Coloring& c, const Pattern& pat);

}  // namespace prismeq
