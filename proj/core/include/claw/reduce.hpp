#ifndef CLAW_REDUCE_HPP
#define CLAW_REDUCE_HPP

#include "claw/detect.hpp"
#include "claw/graph.hpp"

#include <vector>

namespace claw::reduce {

/// One skeletal reduction: the pair, the cross edges removed, and the
/// maximum clique of G[A u B] whose cross edges were kept.
struct ReductionStep {
    VertexSet a, b;
    std::vector<std::pair<int, int>> removed_edges;
    VertexSet kept_clique;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool empty() const { return steps.empty(); }
};

/// Reduce a nonskeletal homogeneous pair of cliques by deleting the cross
/// edges outside one maximum clique X of G[A u B] (X is A or B whenever one
/// of them is maximum; otherwise a Konig-constructed maximum clique).
/// Throws contract_error if (a, b) is not a nonskeletal pair.
std::pair<Graph, ReductionStep> skeletal_reduce_pair(const Graph& g, const VertexSet& a,
                                                     const VertexSet& b);

/// Repeatedly find and reduce nonskeletal pairs (nonlinear before linear)
/// until the graph is skeletal.
std::pair<Graph, ReductionTrace> make_skeletal(const Graph& g);

/// Invert one reduction on a proper coloring of the reduced graph: recolor
/// A u B so each side keeps the color set it had, pairing the shared colors
/// on nonadjacent cross pairs via a matching in the bipartite complement.
Coloring lift_coloring(const Graph& g, const ReductionStep& step, const Coloring& reduced);

/// Fold lift_coloring right-to-left over the trace.
Coloring lift_through_trace(const Graph& g, const ReductionTrace& trace,
                            const Coloring& reduced);

} // namespace claw::reduce

#endif
