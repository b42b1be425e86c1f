#include "claw/instance.hpp"

namespace claw {

void ThreeCliques::validate(const Graph& g) const {
    if (a.intersects(b) || a.intersects(c) || b.intersects(c))
        throw contract_error("ThreeCliques: cliques must be disjoint");
    if ((a | b | c).count() != g.n())
        throw contract_error("ThreeCliques: cliques must cover the graph");
    if (!g.is_clique(a) || !g.is_clique(b) || !g.is_clique(c))
        throw contract_error("ThreeCliques: parts must be cliques");
}

} // namespace claw
