#include "claw/reduce.hpp"
#include "claw/oracle.hpp"

#include <algorithm>
#include <set>

namespace claw::reduce {

using detect::PairKind;

std::pair<Graph, ReductionStep> skeletal_reduce_pair(const Graph& g, const VertexSet& a,
                                                     const VertexSet& b) {
    PairKind kind = detect::classify_pair(g, a, b); // verifies the pair
    if (kind == PairKind::Skeletal)
        throw contract_error("skeletal_reduce_pair: pair is already skeletal");

    int omega = detect::cobipartite_clique_number(g, a, b);
    VertexSet x(a.universe());
    if (a.count() == omega) {
        x = a;
    } else if (b.count() == omega) {
        x = b;
    } else {
        detect::cobipartite_clique_number(g, a, b, &x);
    }

    Graph out = g;
    ReductionStep step;
    step.a = a;
    step.b = b;
    step.kept_clique = x;
    CLAW_FOR_SET(u, a) {
        Bitset cross = g.neighbors(u) & b;
        CLAW_FOR_SET(v, cross) {
            if (!(x.contains(u) && x.contains(v))) {
                out.remove_edge(u, v);
                step.removed_edges.emplace_back(u, v);
            }
        }
    }
    if (step.removed_edges.empty())
        throw contract_error("skeletal_reduce_pair: nothing to remove (pair not nonskeletal?)");
    return {std::move(out), std::move(step)};
}

std::pair<Graph, ReductionTrace> make_skeletal(const Graph& g) {
    Graph cur = g;
    ReductionTrace trace;
    int guard = g.m() + 1;
    while (guard-- > 0) {
        std::optional<detect::CliquePair> p = detect::find_nonlinear_hpoc(cur);
        if (!p) p = detect::find_nonskeletal_linear_hpoc(cur, /*assume_no_nonlinear=*/true);
        if (!p) return {std::move(cur), std::move(trace)};
        auto [next, step] = skeletal_reduce_pair(cur, p->a, p->b);
        cur = std::move(next);
        trace.steps.push_back(std::move(step));
    }
    throw contract_error("make_skeletal: did not terminate within m steps");
}

Coloring lift_coloring(const Graph& g, const ReductionStep& step, const Coloring& reduced) {
    const VertexSet& a = step.a;
    const VertexSet& b = step.b;

    std::set<int> sa, sb;
    CLAW_FOR_SET(u, a) sa.insert(reduced.color[u]);
    CLAW_FOR_SET(v, b) sb.insert(reduced.color[v]);
    std::vector<int> shared;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(shared));

    auto av = a.to_vector();
    auto bv = b.to_vector();
    // nonadjacent cross pairs in the pre-reduction graph host shared colors
    std::vector<std::vector<int>> comp(av.size());
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = 0; j < bv.size(); ++j)
            if (!g.adjacent(av[i], bv[j])) comp[i].push_back(int(j));
    oracle::Matching m = oracle::max_bipartite_matching(int(av.size()), int(bv.size()), comp);
    if (m.size() < int(shared.size()))
        throw contract_error("lift_coloring: shared colors exceed complement matching");

    Coloring out = reduced;
    std::vector<char> a_done(av.size(), false), b_done(bv.size(), false);
    for (size_t i = 0; i < shared.size(); ++i) {
        auto [ai, bj] = m.edges[i];
        out.color[av[ai]] = shared[i];
        out.color[bv[bj]] = shared[i];
        a_done[ai] = true;
        b_done[bj] = true;
    }
    // remaining colors of each side go bijectively to the remaining vertices
    std::vector<int> rest_a, rest_b;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(rest_a));
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                        std::back_inserter(rest_b));
    size_t ka = 0, kb = 0;
    for (size_t i = 0; i < av.size(); ++i)
        if (!a_done[i]) out.color[av[i]] = rest_a[ka++];
    for (size_t j = 0; j < bv.size(); ++j)
        if (!b_done[j]) out.color[bv[j]] = rest_b[kb++];
    if (ka != rest_a.size() || kb != rest_b.size())
        throw contract_error("lift_coloring: color set size mismatch");
    return out;
}

Coloring lift_through_trace(const Graph& g, const ReductionTrace& trace,
                            const Coloring& reduced) {
    // rebuild the intermediate graphs so each lift sees its pre-step graph
    std::vector<Graph> pre;
    pre.reserve(trace.steps.size());
    Graph cur = g;
    for (const auto& step : trace.steps) {
        pre.push_back(cur);
        for (auto [u, v] : step.removed_edges) cur.remove_edge(u, v);
    }
    Coloring c = reduced;
    for (int i = int(trace.steps.size()) - 1; i >= 0; --i)
        c = lift_coloring(pre[i], trace.steps[i], c);
    return c;
}

} // namespace claw::reduce
