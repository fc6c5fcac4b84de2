#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vck/graph.hpp"

namespace vck {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// DIMACS edge format: `c` comment lines, one `p edge <n> <m>` header, then
// `e <u> <v>` lines with 1-based endpoints. Vertices 1..n map to VertexIds
// 0..n-1 in order. Duplicate edge lines and both orientations collapse to a
// single edge; self-loops and out-of-range endpoints are rejected with the
// offending line number. The declared edge count is not enforced (duplicates
// legitimately shrink it).
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

// Writes `p edge n m` followed by one `e` line per edge. Vertices are
// renumbered 1..n by ascending VertexId, so parse(write(g)) is isomorphic to
// g under that renumbering.
void write_dimacs(const Graph& g, std::ostream& out);
std::string write_dimacs(const Graph& g);

}  // namespace vck
