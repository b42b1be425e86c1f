#include "claw/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace claw {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw parse_error("dimacs: line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    bool got_header = false;
    int n = 0;
    Graph g;
    int ln = 0;
    for (std::string line; std::getline(in, line);) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            if (got_header) fail(ln, "duplicate header");
            std::string fmt;
            long nv = -1, ne = -1;
            iss >> fmt >> nv >> ne;
            if (!iss || (fmt != "edge" && fmt != "edges" && fmt != "col") || nv < 0 || ne < 0)
                fail(ln, "malformed header");
            n = int(nv);
            g = Graph(n);
            got_header = true;
        } else if (tag == "e") {
            if (!got_header) fail(ln, "edge before header");
            long u = 0, v = 0;
            iss >> u >> v;
            if (!iss) fail(ln, "malformed edge");
            if (u < 1 || u > n || v < 1 || v > n) fail(ln, "endpoint out of range");
            if (u == v) fail(ln, "loop edge");
            g.add_edge(int(u - 1), int(v - 1));
        } else if (!tag.empty()) {
            fail(ln, "unknown line type '" + tag + "'");
        }
    }
    if (!got_header) throw parse_error("dimacs: missing 'p edge' header");
    return g;
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream iss(text);
    return parse_dimacs(iss);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("dimacs: cannot open " + path);
    return parse_dimacs(in);
}

void emit_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream oss;
    emit_dimacs(g, oss);
    return oss.str();
}

void write_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("dimacs: cannot write " + path);
    emit_dimacs(g, out);
}

} // namespace claw
