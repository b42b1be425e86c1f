#ifndef CLAW_DIMACS_HPP
#define CLAW_DIMACS_HPP

#include "claw/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace claw {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// DIMACS .col reader: one "p edge n m" header, then "e u v" lines with
/// 1-based endpoints. Duplicate edges collapse; comments ("c ...") skipped.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);
Graph read_dimacs_file(const std::string& path);

/// Writer emits "p edge n m" then "e u v" sorted with u < v, 1-based.
void emit_dimacs(const Graph& g, std::ostream& out);
std::string emit_dimacs(const Graph& g);
void write_dimacs_file(const Graph& g, const std::string& path);

} // namespace claw

#endif
