#ifndef CLAW_TEST_UTIL_HPP
#define CLAW_TEST_UTIL_HPP

#include "claw/detect.hpp"
#include "claw/graph.hpp"

#include <optional>
#include <random>
#include <vector>

namespace test_util {

using claw::Bitset;
using claw::Graph;
using claw::VertexSet;

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

/// The icosahedron: ring v1..v10 with distance-1 and distance-2 chords,
/// v0 joined to the odd ring vertices, v11 to the even ones.
inline Graph icosahedron() {
    Graph g(12);
    auto ring = [](int i) { return (i - 1) % 10 + 1; };
    for (int i = 1; i <= 10; ++i) {
        g.add_edge(i, ring(i % 10 + 1));
        g.add_edge(i, ring((i + 1) % 10 + 1));
    }
    for (int i = 1; i <= 10; i += 2) g.add_edge(0, i);
    for (int i = 2; i <= 10; i += 2) g.add_edge(11, i);
    return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

/// Unpruned quadruple scan; independent of detect::find_claw.
inline bool exhaustive_has_claw(const Graph& g) {
    for (int c = 0; c < g.n(); ++c)
        for (int x = 0; x < g.n(); ++x)
            for (int y = x + 1; y < g.n(); ++y)
                for (int z = y + 1; z < g.n(); ++z) {
                    if (x == c || y == c || z == c) continue;
                    if (g.adjacent(c, x) && g.adjacent(c, y) && g.adjacent(c, z) &&
                        !g.adjacent(x, y) && !g.adjacent(x, z) && !g.adjacent(y, z))
                        return true;
                }
    return false;
}

/// Plain backtracking chromatic number, no clique seeding or DSATUR;
/// independent route for cross-checks on small graphs.
inline bool brute_colorable(const Graph& g, int k, std::vector<int>& col, int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        CLAW_FOR_SET(u, g.neighbors(v)) {
            if (u < v && col[u] == c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            col[v] = c;
            if (brute_colorable(g, k, col, v + 1)) return true;
        }
    }
    return false;
}

inline int brute_chromatic(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.n(), -1);
        if (brute_colorable(g, k, col, 0)) return k;
    }
}

/// Every nonempty clique, by recursive extension.
inline void extend_cliques(const Graph& g, Bitset cur, int from, std::vector<Bitset>& out) {
    for (int v = from; v < g.n(); ++v) {
        Bitset rest = cur;
        if (!rest.subset_of(g.neighbors(v))) continue;
        rest.add(v);
        out.push_back(rest);
        extend_cliques(g, rest, v + 1, out);
    }
}

inline std::vector<Bitset> all_cliques(const Graph& g) {
    std::vector<Bitset> out;
    extend_cliques(g, Bitset(g.n()), 0, out);
    return out;
}

/// Every homogeneous pair of cliques, as (a, b) with min(a) < min(b).
inline std::vector<std::pair<VertexSet, VertexSet>> all_hpocs(const Graph& g) {
    auto cliques = all_cliques(g);
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (size_t i = 0; i < cliques.size(); ++i)
        for (size_t j = i + 1; j < cliques.size(); ++j) {
            if (cliques[i].intersects(cliques[j])) continue;
            const Bitset& a = cliques[i];
            const Bitset& b = cliques[j];
            if (claw::detect::is_homogeneous_pair_of_cliques(g, a, b))
                out.emplace_back(a, b);
        }
    return out;
}

} // namespace test_util

#endif
