#ifndef CLAW_INSTANCE_HPP
#define CLAW_INSTANCE_HPP

#include "claw/graph.hpp"
#include "claw/interval.hpp"
#include "claw/join.hpp"
#include "claw/thickening.hpp"

#include <optional>
#include <string>

namespace claw {

/// Partition of the vertices into three cliques (complement 3-coloring).
struct ThreeCliques {
    VertexSet a, b, c;
    void validate(const Graph& g) const;
};

/// Structure hints attached to a generated instance; colorers consume
/// whichever field their pipeline understands.
struct Annotation {
    std::optional<IntervalRepresentation> interval;
    std::optional<ThickeningSpec> thickening;
    std::optional<JoinAnnotation> join;
    std::optional<ThreeCliques> three_cliques;

    bool empty() const {
        return !interval && !thickening && !join && !three_cliques;
    }
};

struct Instance {
    Graph g;
    Annotation ann;
};

} // namespace claw

#endif
