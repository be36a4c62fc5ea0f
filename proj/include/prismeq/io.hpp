#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "prismeq/coloring.hpp"
#include "prismeq/lists.hpp"
#include "prismeq/prism.hpp"

namespace prismeq {

// Line-oriented records (grammar in docs/formats.md):
//   prism n=<n>
//   list U<i>|V<i> = c1,c2,...
//   color U<i>|V<i> = c
//   word = n1,n2,...
//   UNSAT
// Emission is byte-stable: fixed scan order (U0,V0,U1,V1,...), colors sorted.

std::string serialize_prism(const Prism& p);
std::string serialize_assignment(const Prism& p, const ListAssignment& L);
std::string serialize_coloring(const Prism& p, const Coloring& c, bool with_word = true);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ParsedInstance {
    std::optional<Prism> prism;
    std::optional<ListAssignment> lists;
    std::optional<Coloring> coloring;
    bool unsat_marker = false;
};

// Parses any mix of the records above; throws ParseError with line numbers.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance(const std::string& text);

}  // namespace prismeq
