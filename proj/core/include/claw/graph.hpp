#ifndef CLAW_GRAPH_HPP
#define CLAW_GRAPH_HPP

#include "claw/bitset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace claw {

using VertexSet = Bitset;

/// Violation of a documented precondition or type invariant.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Simple undirected graph on dense 0-based vertex indices.
/// Adjacency is symmetric and irreflexive; stored as one bitset per vertex.
/// Treat values as immutable once built: transformations copy.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int n() const { return n_; }

    int m() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    void add_edge(int u, int v) {
        if (u == v) throw contract_error("add_edge: loop at vertex " + std::to_string(u));
        adj_[u].add(v);
        adj_[v].add(u);
    }
    void remove_edge(int u, int v) {
        adj_[u].remove(v);
        adj_[v].remove(u);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    VertexSet closed_neighborhood(int v) const {
        Bitset s = adj_[v];
        s.add(v);
        return s;
    }

    VertexSet all_vertices() const {
        Bitset s(n_);
        s.fill();
        return s;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    bool is_clique(const VertexSet& s) const {
        CLAW_FOR_SET(u, s) {
            Bitset rest = s;
            rest.remove(u);
            if (!rest.subset_of(adj_[u])) return false;
        }
        return true;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

/// Total color assignment, vertex -> color index in [0, k).
struct Coloring {
    std::vector<int> color;

    int k() const {
        int mx = -1;
        for (int c : color) mx = std::max(mx, c);
        return mx + 1;
    }
    /// Number of distinct colors actually used (image cardinality).
    int colors_used() const;
};

/// Empty if proper; otherwise one violating edge.
std::optional<std::pair<int, int>> first_violation(const Graph& g, const Coloring& c);

inline bool check_coloring(const Graph& g, const Coloring& c) {
    return c.color.size() == size_t(g.n()) && !first_violation(g, c);
}

Graph complement(const Graph& g);

/// Subgraph induced on s. old_to_new[v] is the new index of v, or -1.
Graph induced(const Graph& g, const VertexSet& s, std::vector<int>* old_to_new = nullptr,
              std::vector<int>* new_to_old = nullptr);

} // namespace claw

#endif
