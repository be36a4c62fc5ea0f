#include "prismeq/certificates.hpp"

#include <sstream>

#include "prismeq/io.hpp"

namespace prismeq {

namespace {

void serialize_node(const RefutationNode& node, const Prism& p, std::string& out) {
    out += "branch " + p.vertex_name(node.vertex) + " " + std::to_string(node.cases.size()) + "\n";
    for (const auto& cs : node.cases) {
        if (cs.conflict_vertex >= 0) {
            out += "case " + std::to_string(cs.color) + " blocked " +
                   p.vertex_name(cs.conflict_vertex) + "\n";
        } else {
            out += "case " + std::to_string(cs.color) + " open\n";
            serialize_node(*cs.sub, p, out);
        }
    }
}

int vertex_id(const Prism& p, const std::string& name, int line) {
    if (name.size() < 2 || (name[0] != 'U' && name[0] != 'V'))
        throw ParseError(line, "bad vertex '" + name + "'");
    int idx;
    try {
        idx = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw ParseError(line, "bad vertex '" + name + "'");
    }
    if (idx < 0 || idx >= p.n()) throw ParseError(line, "vertex index out of range");
    return p.id(name[0] == 'U' ? Layer::U : Layer::V, idx);
}

// Replays one branch node; returns false with detail on any defect.
bool replay(const Prism& p, const ListAssignment& L, std::vector<int>& assign,
            std::istringstream& in, int& line, std::string& detail) {
    std::string tok;
    in >> tok;
    ++line;
    if (tok != "branch") {
        detail = "expected branch, got '" + tok + "'";
        return false;
    }
    std::string vname;
    size_t ncases;
    in >> vname >> ncases;
    int v = vertex_id(p, vname, line);
    if (assign[v] >= 0) {
        detail = "branch on already assigned " + vname;
        return false;
    }
    const auto& list = L.lists[v];
    if (ncases != list.size()) {
        detail = "branch on " + vname + " does not cover the whole list";
        return false;
    }
    for (size_t i = 0; i < ncases; ++i) {
        std::string kw, what;
        int color;
        in >> kw >> color >> what;
        ++line;
        if (kw != "case" || color != list[i]) {
            detail = "case " + std::to_string(i) + " of " + vname +
                     " must enumerate the list in ascending order";
            return false;
        }
        if (what == "blocked") {
            std::string wname;
            in >> wname;
            int w = vertex_id(p, wname, line);
            if (!p.adjacent(v, w) || assign[w] != color) {
                detail = vname + " case " + std::to_string(color) + ": " + wname +
                         " does not block it";
                return false;
            }
        } else if (what == "open") {
            assign[v] = color;
            bool ok = replay(p, L, assign, in, line, detail);
            assign[v] = -1;
            if (!ok) return false;
        } else {
            detail = "expected blocked/open, got '" + what + "'";
            return false;
        }
    }
    return true;
}

}  // namespace

std::string serialize_refutation(const RefutationNode& node, const Prism& p) {
    std::string out;
    serialize_node(node, p, out);
    return out;
}

std::string Certificate::serialize() const {
    std::string s;
    s += "certificate v" + std::to_string(version) + "\n";
    s += "claim " + claim + "\n";
    s += serialize_assignment(prism, lists);
    if (bound) s += "bound = " + std::to_string(*bound) + "\n";
    if (unsat) {
        s += "verdict UNSAT\n";
        s += "refutation\n";
        s += refutation;
        s += "end refutation\n";
    } else {
        s += "verdict SAT\n";
        s += serialize_coloring(prism, *coloring);
    }
    s += "end certificate\n";
    return s;
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Certificate cert;
    std::string body;       // records handed to parse_instance
    std::string refutation; // raw refutation block
    bool in_refutation = false;
    bool saw_header = false, saw_verdict = false, saw_end = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        size_t a = trimmed.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = trimmed.find_last_not_of(" \t\r");
        trimmed = trimmed.substr(a, b - a + 1);
        if (trimmed.empty()) continue;
        if (in_refutation) {
            if (trimmed == "end refutation") {
                in_refutation = false;
            } else {
                refutation += trimmed + "\n";
            }
            continue;
        }
        if (trimmed.rfind("certificate v", 0) == 0) {
            cert.version = std::stoi(trimmed.substr(13));
            saw_header = true;
        } else if (trimmed.rfind("claim ", 0) == 0) {
            cert.claim = trimmed.substr(6);
        } else if (trimmed.rfind("bound = ", 0) == 0) {
            cert.bound = std::stoi(trimmed.substr(8));
        } else if (trimmed == "verdict UNSAT") {
            cert.unsat = true;
            saw_verdict = true;
        } else if (trimmed == "verdict SAT") {
            cert.unsat = false;
            saw_verdict = true;
        } else if (trimmed == "refutation") {
            in_refutation = true;
        } else if (trimmed == "end certificate") {
            saw_end = true;
        } else {
            body += trimmed + "\n";
        }
    }
    if (!saw_header) throw ParseError(1, "missing certificate header");
    if (!saw_verdict) throw ParseError(lineno, "missing verdict");
    if (!saw_end) throw ParseError(lineno, "missing end certificate");
    if (in_refutation) throw ParseError(lineno, "unterminated refutation");
    ParsedInstance inst = parse_instance(body);
    if (!inst.prism || !inst.lists) throw ParseError(lineno, "certificate missing prism/lists");
    cert.prism = *inst.prism;
    cert.lists = *inst.lists;
    cert.refutation = refutation;
    if (!cert.unsat) {
        if (!inst.coloring) throw ParseError(lineno, "SAT certificate missing coloring");
        cert.coloring = inst.coloring;
    }
    return cert;
}

CheckResult check_certificate(const Certificate& cert) {
    const Prism& p = cert.prism;
    try {
        cert.lists.validate();
    } catch (const std::exception& e) {
        return {false, std::string("bad assignment: ") + e.what()};
    }
    if (!cert.unsat) {
        const Coloring& c = *cert.coloring;
        if (c.color.size() != static_cast<size_t>(p.vertex_count()))
            return {false, "coloring has wrong vertex count"};
        if (!is_proper(p, c)) return {false, "witness coloring is not proper"};
        if (!respects_lists(cert.lists, c)) return {false, "witness coloring leaves its lists"};
        if (cert.bound) {
            ColorWord w = color_word(c);
            if (!w.sizes.empty() && w.sizes[0] > *cert.bound)
                return {false, "witness exceeds bound " + std::to_string(*cert.bound)};
        }
        return {true, "SAT witness verified"};
    }
    if (cert.refutation.empty()) return {false, "UNSAT certificate without refutation"};
    std::istringstream in(cert.refutation);
    std::vector<int> assign(p.vertex_count(), -1);
    int line = 0;
    std::string detail;
    if (!replay(p, cert.lists, assign, in, line, detail)) return {false, "refutation: " + detail};
    std::string tail;
    if (in >> tail) return {false, "refutation has trailing content"};
    return {true, "UNSAT refutation verified"};
}

CheckResult check_certificate_text(const std::string& text) {
    try {
        return check_certificate(parse_certificate(text));
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

Certificate make_sat_certificate(const std::string& claim, const Prism& p,
                                 const ListAssignment& L, const Coloring& c,
                                 std::optional<int> bound) {
    Certificate cert;
    cert.claim = claim;
    cert.prism = p;
    cert.lists = L;
    cert.coloring = c;
    cert.bound = bound;
    cert.unsat = false;
    return cert;
}

Certificate make_unsat_certificate(const std::string& claim, const Prism& p,
                                   const ListAssignment& L, const RefutationNode& refutation) {
    Certificate cert;
    cert.claim = claim;
    cert.prism = p;
    cert.lists = L;
    cert.unsat = true;
    cert.refutation = serialize_refutation(refutation, p);
    return cert;
}

}  // namespace prismeq
