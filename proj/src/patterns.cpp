#include "prismeq/patterns.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prismeq {

const Cell* Pattern::cell_at(Layer l, int offset) const {
    for (const auto& c : cells)
        if (c.layer == l && c.offset == offset) return &c;
    return nullptr;
}

namespace {

RoleDomain parse_domain(const std::string& s, int line) {
    if (s == "largest") return RoleDomain::Largest;
    if (s == "secondlargest") return RoleDomain::SecondLargest;
    if (s == "any") return RoleDomain::Any;
    throw std::runtime_error("configs line " + std::to_string(line) + ": unknown role domain '" + s + "'");
}

}  // namespace

std::vector<Pattern> parse_patterns(std::istream& in) {
    std::vector<Pattern> out;
    Pattern cur;
    bool open = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("configs line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw == "config") {
            if (open) fail("nested config");
            cur = Pattern{};
            std::string name, width;
            ss >> name >> width;
            if (name.empty() || width.rfind("width=", 0) != 0) fail("expected: config <name> width=<w>");
            cur.name = name;
            cur.width = std::stoi(width.substr(6));
            if (cur.width < 1 || cur.width > 7) fail("width out of range [1,7]");
            open = true;
        } else if (kw == "role") {
            if (!open) fail("role outside config");
            std::string name, eq, dom;
            ss >> name >> eq >> dom;
            if (eq != "=") fail("expected: role <name> = <domain>");
            cur.roles.emplace_back(name, parse_domain(dom, lineno));
        } else if (kw == "cell") {
            if (!open) fail("cell outside config");
            std::string vtx, eq, what;
            ss >> vtx >> eq >> what;
            if (eq != "=" || vtx.size() < 2 || (vtx[0] != 'U' && vtx[0] != 'V'))
                fail("expected: cell U<j>|V<j> = <constraint>");
            Cell cell;
            cell.layer = vtx[0] == 'U' ? Layer::U : Layer::V;
            cell.offset = std::stoi(vtx.substr(1));
            if (cell.offset < 0 || cell.offset >= cur.width) fail("cell offset outside window");
            if (what == "free") {
                cell.kind = CellKind::Free;
            } else if (what.rfind("not", 0) == 0) {
                cell.kind = CellKind::MustNotBeRole;
                cell.role = what.substr(3);
            } else {
                cell.kind = CellKind::MustBeRole;
                cell.role = what;
            }
            if (cell.kind != CellKind::Free) {
                bool declared = false;
                for (auto& [r, d] : cur.roles) declared |= (r == cell.role);
                if (!declared) fail("undeclared role '" + cell.role + "'");
            }
            if (cur.cell_at(cell.layer, cell.offset)) fail("duplicate cell");
            cur.cells.push_back(cell);
        } else if (kw == "guard") {
            if (!open) fail("guard outside config");
            std::string rest;
            std::getline(ss, rest);
            size_t s = rest.find_first_not_of(" \t");
            cur.guards.push_back(s == std::string::npos ? "" : rest.substr(s));
        } else if (kw == "end") {
            if (!open) fail("end outside config");
            out.push_back(cur);
            open = false;
        } else {
            fail("unrecognized keyword '" + kw + "'");
        }
    }
    if (open) throw std::runtime_error("configs: unterminated config " + cur.name);
    return out;
}

std::vector<Pattern> parse_patterns(const std::string& text) {
    std::istringstream ss(text);
    return parse_patterns(ss);
}

const std::vector<Pattern>& builtin_patterns() {
    static const std::vector<Pattern> pats = parse_patterns(builtin_patterns_text());
    return pats;
}

const Pattern& builtin_pattern(const std::string& name) {
    for (const auto& p : builtin_patterns())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown configuration '" + name + "'");
}

std::vector<Placement> find_matches(const Prism& p, const Coloring& c, const Pattern& pat) {
    std::vector<Placement> out;
    if (pat.width > p.n()) return out;
    auto sizes = class_sizes(c);
    int max_size = 0;
    for (auto& [color, count] : sizes) max_size = std::max(max_size, count);

    for (const VertexMap& sigma : automorphism_group(p)) {
        Placement pl{sigma, {}};
        bool ok = true;
        // bindings are forced by the colors under the MustBe cells
        for (const Cell& cell : pat.cells) {
            if (cell.kind != CellKind::MustBeRole) continue;
            int x = c.color[pl.vertex(p, cell.layer, cell.offset)];
            auto it = pl.bind.find(cell.role);
            if (it == pl.bind.end())
                pl.bind[cell.role] = x;
            else if (it->second != x) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // injectivity
        for (auto i = pl.bind.begin(); ok && i != pl.bind.end(); ++i)
            for (auto j = std::next(i); j != pl.bind.end(); ++j)
                if (i->second == j->second) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        // role domains
        int blue = -1;
        if (auto it = pl.bind.find("blue"); it != pl.bind.end()) blue = it->second;
        for (auto& [role, domain] : pat.roles) {
            auto it = pl.bind.find(role);
            if (it == pl.bind.end()) continue;  // role used only in guards
            int x = it->second;
            if (domain == RoleDomain::Largest) {
                if (sizes.at(x) != max_size) ok = false;
            } else if (domain == RoleDomain::SecondLargest) {
                if (blue < 0 || x == blue) {
                    ok = false;
                } else {
                    int second = 0;
                    for (auto& [color, count] : sizes)
                        if (color != blue) second = std::max(second, count);
                    if (sizes.at(x) != second) ok = false;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        // negative cells need their role bound somewhere
        for (const Cell& cell : pat.cells) {
            if (cell.kind != CellKind::MustNotBeRole) continue;
            auto it = pl.bind.find(cell.role);
            if (it == pl.bind.end()) throw std::logic_error("pattern " + pat.name + ": not" + cell.role + " with unbound role");
            if (c.color[pl.vertex(p, cell.layer, cell.offset)] == it->second) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(pl));
    }
    return out;
}

}  // namespace prismeq
