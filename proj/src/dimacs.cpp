#include "vck/dimacs.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace vck {

Graph parse_dimacs(std::istream& in) {
    Graph g;
    bool have_header = false;
    long long n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            std::string fmt;
            long long m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
            have_header = true;
            for (long long i = 0; i < n; ++i) g.add_vertex();
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range [1.." + std::to_string(n) + "]");
            if (u == v) throw ParseError(lineno, "self-loop rejected");
            g.add_edge(VertexId{static_cast<std::uint32_t>(u - 1)},
                       VertexId{static_cast<std::uint32_t>(v - 1)});
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing 'p edge' header");
    return g;
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    std::map<VertexId, std::size_t> label;
    std::size_t next = 1;
    for (VertexId v : g.vertices()) label[v] = next++;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << label.at(u) << ' ' << label.at(v) << '\n';
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

}  // namespace vck
