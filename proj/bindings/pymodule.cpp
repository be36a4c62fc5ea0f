#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prismeq/canonical.hpp"
#include "prismeq/discharge.hpp"
#include "prismeq/fixtures.hpp"
#include "prismeq/io.hpp"
#include "prismeq/verify.hpp"
#include "prismeq/window.hpp"

namespace py = pybind11;
using namespace prismeq;

namespace {

ListAssignment lists_from(const Prism& p, const std::vector<std::vector<int>>& lists) {
    if (lists.size() != static_cast<size_t>(p.vertex_count()))
        throw std::invalid_argument("need one list per vertex");
    ListAssignment L{p.n(), static_cast<int>(lists[0].size()), lists};
    for (auto& l : L.lists) std::sort(l.begin(), l.end());
    L.validate();
    return L;
}

}  // namespace

PYBIND11_MODULE(_prismeq, m) {
    m.doc() = "exact list-coloring engine for prism graphs";

    py::class_<Prism>(m, "Prism")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Prism::n)
        .def_property_readonly("vertex_count", &Prism::vertex_count)
        .def_property_readonly("edge_count", &Prism::edge_count)
        .def_property_readonly("face_count", &Prism::face_count)
        .def_property_readonly("bipartite", &Prism::bipartite)
        .def_property_readonly("girth", &Prism::girth)
        .def("neighbors",
             [](const Prism& p, int v) {
                 auto nb = p.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             })
        .def("vertex_name", &Prism::vertex_name);

    py::class_<ListAssignment>(m, "ListAssignment")
        .def_readonly("n", &ListAssignment::n)
        .def_readonly("k", &ListAssignment::k)
        .def_readonly("lists", &ListAssignment::lists)
        .def("serialize",
             [](const ListAssignment& L) { return serialize_assignment(Prism(L.n), L); });

    py::class_<Coloring>(m, "Coloring")
        .def_readonly("color", &Coloring::color)
        .def("word", [](const Coloring& c) { return color_word(c).sizes; });

    m.def("uniform_assignment",
          [](const Prism& p, const std::vector<int>& colors) { return uniform_assignment(p, colors); });
    m.def("random_uniform",
          [](const Prism& p, int k, int universe, uint64_t seed) {
              return random_uniform(p, k, universe, seed);
          },
          py::arg("p"), py::arg("k"), py::arg("universe"), py::arg("seed"));
    m.def("assignment", &lists_from, "build a ListAssignment from per-vertex lists");
    m.def("is_proper", &is_proper);
    m.def("respects_lists", &respects_lists);
    m.def("canonical_form", &canonical_form);

    m.def("solve_proper", [](const Prism& p, const ListAssignment& L) -> py::object {
        SolveResult r = solve_proper(p, L);
        if (!r.sat) return py::none();
        return py::cast(r.coloring);
    });
    m.def("lexmin", [](const Prism& p, const ListAssignment& L, uint64_t node_limit) {
        LexminOptions opt;
        opt.node_limit = node_limit;
        LexminResult r = lexmin(p, L, opt);
        return py::make_tuple(r.coloring, r.word.sizes, r.exact);
    }, py::arg("p"), py::arg("L"), py::arg("node_limit") = 100000000ULL);
    m.def("equitable_coloring", [](const Prism& p, const ListAssignment& L) {
        EquitableResult r = equitable_coloring(p, L);
        return py::make_tuple(r.coloring, r.bound, r.exact);
    });
    m.def("independence_number",
          [](const std::vector<std::vector<int>>& adj) { return independence_number(adj); });
    m.def("prism_adjacency", &adjacency_list);
    m.def("window_improve", [](const Prism& p, const ListAssignment& L, const Coloring& c, int w)
              -> py::object {
        auto r = window_improve(p, L, c, w);
        if (!r) return py::none();
        return py::cast(*r);
    });
    m.def("block_tags", [](const Prism& p, const Coloring& c, int blue) -> py::object {
        auto dec = block_decompose(p, c, blue);
        if (std::holds_alternative<BlueRunTooLong>(dec)) return py::none();
        return py::cast(std::get<BlockSequence>(dec).tags_string());
    });
    m.def("audit_text", [](const Prism& p, const Coloring& c, int blue) {
        return audit(p, c, blue).serialize();
    });
    m.def("total_charge_thirds", [](const Prism& p, const Coloring& c, int blue) {
        return total_charge(p, c, blue).thirds;
    });
    m.def("verify_choice", [](int n) {
        ChoiceVerification v = verify_choice_number(n);
        return py::make_tuple(v.ok, v.detail);
    });
    m.def("check_certificate", [](const std::string& text) {
        CheckResult r = check_certificate_text(text);
        return py::make_tuple(r.ok, r.detail);
    });
    m.def("largest_class_colors", &largest_class_colors);
}
