#include "prismeq/io.hpp"

#include <sstream>

namespace prismeq {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

// "U3" / "V12" -> vertex id; returns -1 on bad syntax
int parse_vertex(const Prism& p, const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'U' && tok[0] != 'V')) return -1;
    for (size_t i = 1; i < tok.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(tok[i]))) return -1;
    int idx = std::stoi(tok.substr(1));
    if (idx < 0 || idx >= p.n()) return -1;
    return p.id(tok[0] == 'U' ? Layer::U : Layer::V, idx);
}

std::vector<int> parse_int_list(const std::string& s, int line) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError(line, "empty entry in list");
        item = item.substr(a, b - a + 1);
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError(line, "bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(line, "empty list");
    return out;
}

}  // namespace

std::string serialize_prism(const Prism& p) { return "prism n=" + std::to_string(p.n()) + "\n"; }

std::string serialize_assignment(const Prism& p, const ListAssignment& L) {
    std::string s = serialize_prism(p);
    for (int v = 0; v < p.vertex_count(); ++v)
        s += "list " + p.vertex_name(v) + " = " + join(L.lists[v]) + "\n";
    return s;
}

std::string serialize_coloring(const Prism& p, const Coloring& c, bool with_word) {
    std::string s;
    for (int v = 0; v < p.vertex_count(); ++v)
        s += "color " + p.vertex_name(v) + " = " + std::to_string(c.color[v]) + "\n";
    if (with_word) s += "word = " + color_word(c).to_string() + "\n";
    return s;
}

ParsedInstance parse_instance(std::istream& in) {
    ParsedInstance out;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> list_lines, color_lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        if (line == "UNSAT") {
            out.unsat_marker = true;
            continue;
        }
        if (line.rfind("prism", 0) == 0) {
            size_t eq = line.find("n=");
            if (eq == std::string::npos) throw ParseError(lineno, "expected prism n=<n>");
            int n;
            try {
                n = std::stoi(line.substr(eq + 2));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad prism size");
            }
            if (n < 3) throw ParseError(lineno, "prism requires n >= 3");
            out.prism = Prism(n);
            continue;
        }
        if (line.rfind("word", 0) == 0) continue;  // informational footer
        std::stringstream ss(line);
        std::string kw, vtx, eq;
        ss >> kw >> vtx >> eq;
        std::string rest;
        std::getline(ss, rest);
        if ((kw != "list" && kw != "color") || eq != "=")
            throw ParseError(lineno, "unrecognized record '" + line + "'");
        if (kw == "list")
            list_lines.push_back({lineno, {vtx, rest}});
        else
            color_lines.push_back({lineno, {vtx, rest}});
    }
    if (!out.prism) {
        if (list_lines.empty() && color_lines.empty()) throw ParseError(lineno, "missing prism record");
        throw ParseError(list_lines.empty() ? color_lines[0].first : list_lines[0].first,
                         "list/color record before prism record");
    }
    const Prism& p = *out.prism;
    if (!list_lines.empty()) {
        ListAssignment L{p.n(), 0, std::vector<std::vector<int>>(p.vertex_count())};
        std::vector<bool> seen(p.vertex_count(), false);
        for (auto& [ln, rec] : list_lines) {
            int v = parse_vertex(p, rec.first);
            if (v < 0) throw ParseError(ln, "bad vertex '" + rec.first + "'");
            if (seen[v]) throw ParseError(ln, "duplicate list for " + rec.first);
            seen[v] = true;
            auto colors = parse_int_list(rec.second, ln);
            std::sort(colors.begin(), colors.end());
            if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
                throw ParseError(ln, "repeated color in list");
            L.lists[v] = std::move(colors);
        }
        for (int v = 0; v < p.vertex_count(); ++v)
            if (!seen[v]) throw ParseError(lineno, "missing list for " + p.vertex_name(v));
        L.k = static_cast<int>(L.lists[0].size());
        L.validate();
        out.lists = std::move(L);
    }
    if (!color_lines.empty()) {
        Coloring c{std::vector<int>(p.vertex_count(), -1)};
        for (auto& [ln, rec] : color_lines) {
            int v = parse_vertex(p, rec.first);
            if (v < 0) throw ParseError(ln, "bad vertex '" + rec.first + "'");
            auto vals = parse_int_list(rec.second, ln);
            if (vals.size() != 1) throw ParseError(ln, "color record takes one value");
            c.color[v] = vals[0];
        }
        for (int v = 0; v < p.vertex_count(); ++v)
            if (c.color[v] < 0) throw ParseError(lineno, "missing color for " + p.vertex_name(v));
        out.coloring = std::move(c);
    }
    return out;
}

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

}  // namespace prismeq
