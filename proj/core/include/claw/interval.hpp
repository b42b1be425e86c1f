#ifndef CLAW_INTERVAL_HPP
#define CLAW_INTERVAL_HPP

#include "claw/graph.hpp"

#include <utility>
#include <vector>

namespace claw {

/// Positional interval model: order[i] is the vertex at position i, and each
/// interval [a, b] (positions, inclusive) makes its members a clique.
/// Circular intervals may wrap (a > b). Adjacency of the represented graph
/// is "some interval contains both positions".
struct IntervalRepresentation {
    enum class Kind { Linear, Circular };
    Kind kind = Kind::Linear;
    std::vector<int> order;
    std::vector<std::pair<int, int>> intervals;

    int position_of(int v) const; // inverse of order
    bool covers(const std::pair<int, int>& iv, int pos) const;

    /// Graph realized by the representation.
    Graph realize() const;

    /// True iff the representation reproduces g exactly.
    bool consistent_with(const Graph& g) const { return realize() == g; }

    /// Circular representations are "long" when no three intervals cover the
    /// whole circle.
    bool is_long() const;
};

/// True iff positional order is a valid linear interval order for g:
/// whenever u < w < v in the order and u ~ v, also u ~ w and w ~ v.
bool is_linear_interval_order(const Graph& g, const std::vector<int>& order);

/// Representation from a valid linear interval order (maximal consecutive
/// clique windows become the intervals). Throws contract_error otherwise.
IntervalRepresentation representation_from_order(const Graph& g,
                                                 const std::vector<int>& order);

namespace colorers {

/// Optimal coloring of a graph with no stable set of size 3: matched pairs
/// in the complement share a color. Throws contract_error (naming a triad)
/// if alpha > 2.
Coloring color_alpha2(const Graph& g);

/// Greedy sweep along the representation order; exactly omega colors.
Coloring color_linear_interval(const IntervalRepresentation& rep, const Graph& g);

/// Optimal circular interval coloring: fix a canonical coloring of the clique
/// of cut-crossing tail vertices, then backtrack over the rest in order,
/// searching k upward from omega.
Coloring color_circular_interval(const IntervalRepresentation& rep, const Graph& g);

/// List-coloring of a linear interval graph by left-to-right backtracking:
/// vertex v (graph index) may only use colors with allowed[v] true, from a
/// palette of k colors. Returns empty on infeasibility.
std::optional<Coloring> color_linear_interval_with_lists(
    const Graph& g, const std::vector<int>& order, int k,
    const std::vector<std::vector<char>>& allowed);

} // namespace colorers

} // namespace claw

#endif
