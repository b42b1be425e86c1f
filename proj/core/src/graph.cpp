#include "claw/graph.hpp"

#include <algorithm>

namespace claw {

int Coloring::colors_used() const {
    std::vector<int> seen;
    for (int c : color) {
        if (c >= int(seen.size())) seen.resize(c + 1, 0);
        seen[c] = 1;
    }
    int used = 0;
    for (int s : seen) used += s;
    return used;
}

std::optional<std::pair<int, int>> first_violation(const Graph& g, const Coloring& c) {
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return std::make_pair(u, v);
    return std::nullopt;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph induced(const Graph& g, const VertexSet& s, std::vector<int>* old_to_new,
              std::vector<int>* new_to_old) {
    std::vector<int> fwd(g.n(), -1);
    std::vector<int> back;
    CLAW_FOR_SET(v, s) {
        fwd[v] = int(back.size());
        back.push_back(v);
    }
    Graph h(int(back.size()));
    for (int i = 0; i < int(back.size()); ++i) {
        Bitset nb = g.neighbors(back[i]) & s;
        for (int v = nb.next(back[i] + 1); v >= 0; v = nb.next(v + 1)) h.add_edge(i, fwd[v]);
    }
    if (old_to_new) *old_to_new = std::move(fwd);
    if (new_to_old) *new_to_old = std::move(back);
    return h;
}

} // namespace claw
