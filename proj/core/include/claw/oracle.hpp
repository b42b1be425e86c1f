#ifndef CLAW_ORACLE_HPP
#define CLAW_ORACLE_HPP

#include "claw/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace claw::oracle {

/// Exact rational, normalized with positive denominator.
struct Rational {
    boost::multiprecision::cpp_int num{0};
    boost::multiprecision::cpp_int den{1};

    Rational() = default;
    Rational(long n) : num(n) {}
    Rational(boost::multiprecision::cpp_int n, boost::multiprecision::cpp_int d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    long ceil_long() const;
    std::string str() const;
};

/// Set of pairwise disjoint edges.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return int(edges.size()); }
    /// mate[v] = matched partner or -1.
    std::vector<int> mates(int n) const;
};

/// Exact clique number with one witness clique (branch and bound,
/// greedy-coloring upper bounds).
int clique_number(const Graph& g, VertexSet* witness = nullptr);

/// Largest clique containing v within the allowed vertex set.
int max_clique_through(const Graph& g, int v, const VertexSet& allowed);

int independence_number(const Graph& g);

/// Exact chromatic number with an optimal coloring. Branch and bound:
/// maximal clique pre-colored, DSATUR-ordered backtracking, prune at
/// incumbent. Intended envelope n <= ~24; caller enforces size.
int chromatic_number(const Graph& g, Coloring* out = nullptr);

/// Exact fractional chromatic number: covering LP over all maximal stable
/// sets, solved by two-phase simplex in exact rational arithmetic.
/// Throws contract_error above the capacity cap.
Rational fractional_chromatic(const Graph& g, int cap = 18);

/// Maximum-cardinality matching in a general graph (blossom contraction).
Matching max_matching(const Graph& g);

/// Brute-force maximum matching, exponential; test-only cross-check.
Matching max_matching_exhaustive(const Graph& g);

/// Maximum bipartite matching via layered augmenting phases.
/// adj[i] lists right-side neighbors of left vertex i.
Matching max_bipartite_matching(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj);

/// Minimum vertex cover from a maximum bipartite matching (Konig).
/// Returns (left cover vertices, right cover vertices).
std::pair<std::vector<int>, std::vector<int>>
konig_vertex_cover(int n_left, int n_right, const std::vector<std::vector<int>>& adj,
                   const Matching& matching);

/// ceil((Delta + 1 + omega) / 2)
int gamma(const Graph& g);

/// max over v of gamma on the closed neighborhood of v.
int gamma_local(const Graph& g);
int gamma_local_at(const Graph& g, int v);

} // namespace claw::oracle

#endif
