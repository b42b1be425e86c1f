#include "claw/interval.hpp"
#include "claw/detect.hpp"
#include "claw/oracle.hpp"

#include <algorithm>

namespace claw {

int IntervalRepresentation::position_of(int v) const {
    for (int i = 0; i < int(order.size()); ++i)
        if (order[i] == v) return i;
    throw contract_error("IntervalRepresentation: vertex not in order");
}

bool IntervalRepresentation::covers(const std::pair<int, int>& iv, int pos) const {
    auto [a, b] = iv;
    if (a <= b) return a <= pos && pos <= b;
    if (kind == Kind::Linear) throw contract_error("linear interval with a > b");
    return pos >= a || pos <= b; // wraps
}

Graph IntervalRepresentation::realize() const {
    int n = int(order.size());
    Graph g(n);
    for (const auto& iv : intervals) {
        std::vector<int> members;
        for (int p = 0; p < n; ++p)
            if (covers(iv, p)) members.push_back(order[p]);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                g.add_edge(members[i], members[j]);
    }
    return g;
}

bool IntervalRepresentation::is_long() const {
    if (kind != Kind::Circular) return false;
    int n = int(order.size());
    for (size_t i = 0; i < intervals.size(); ++i)
        for (size_t j = i; j < intervals.size(); ++j)
            for (size_t k = j; k < intervals.size(); ++k) {
                bool all = true;
                for (int p = 0; p < n && all; ++p)
                    all = covers(intervals[i], p) || covers(intervals[j], p) ||
                          covers(intervals[k], p);
                if (all) return false;
            }
    return true;
}

bool is_linear_interval_order(const Graph& g, const std::vector<int>& order) {
    int n = int(order.size());
    if (n != g.n()) return false;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // leftmost/rightmost neighbor runs must be solid
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int lo = i, hi = i;
        CLAW_FOR_SET(u, g.neighbors(v)) {
            lo = std::min(lo, pos[u]);
            hi = std::max(hi, pos[u]);
        }
        for (int p = lo; p < i; ++p)
            if (!g.adjacent(v, order[p])) return false;
        for (int p = i + 1; p <= hi; ++p)
            if (!g.adjacent(v, order[p])) return false;
    }
    return true;
}

IntervalRepresentation representation_from_order(const Graph& g,
                                                 const std::vector<int>& order) {
    if (!is_linear_interval_order(g, order))
        throw contract_error("representation_from_order: not a linear interval order");
    int n = int(order.size());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    IntervalRepresentation rep;
    rep.kind = IntervalRepresentation::Kind::Linear;
    rep.order = order;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int hi = i;
        CLAW_FOR_SET(u, g.neighbors(v)) hi = std::max(hi, pos[u]);
        if (hi > i) rep.intervals.emplace_back(i, hi);
    }
    std::sort(rep.intervals.begin(), rep.intervals.end());
    rep.intervals.erase(std::unique(rep.intervals.begin(), rep.intervals.end()),
                        rep.intervals.end());
    return rep;
}

namespace colorers {

Coloring color_alpha2(const Graph& g) {
    if (auto t = detect::find_triad(g))
        throw contract_error("color_alpha2: triad {" + std::to_string((*t)[0]) + "," +
                             std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) +
                             "} violates alpha <= 2");
    oracle::Matching m = oracle::max_matching(complement(g));
    auto mate = m.mates(g.n());
    Coloring c;
    c.color.assign(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (c.color[v] >= 0) continue;
        c.color[v] = next;
        if (mate[v] >= 0) c.color[mate[v]] = next;
        ++next;
    }
    return c;
}

Coloring color_linear_interval(const IntervalRepresentation& rep, const Graph& g) {
    if (rep.kind != IntervalRepresentation::Kind::Linear)
        throw contract_error("color_linear_interval: representation not linear");
    if (!rep.consistent_with(g))
        throw contract_error("color_linear_interval: representation inconsistent with graph");
    Coloring c;
    c.color.assign(g.n(), -1);
    for (int v : rep.order) {
        Bitset taken(g.n() + 1);
        CLAW_FOR_SET(u, g.neighbors(v)) if (c.color[u] >= 0) taken.add(c.color[u]);
        int col = 0;
        while (taken.contains(col)) ++col;
        c.color[v] = col;
    }
    return c;
}

namespace {

/// Backtracking k-coloring of the listed vertices in order; constraints come
/// from every already-colored neighbor (including vertices outside the list).
bool complete_in_order(const Graph& g, const std::vector<int>& order, int k,
                       std::vector<int>& color, size_t idx) {
    if (idx == order.size()) return true;
    int v = order[idx];
    Bitset taken(k);
    CLAW_FOR_SET(u, g.neighbors(v)) {
        if (color[u] >= 0 && color[u] < k) taken.add(color[u]);
    }
    for (int c = 0; c < k; ++c) {
        if (taken.contains(c)) continue;
        color[v] = c;
        if (complete_in_order(g, order, k, color, idx + 1)) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

Coloring color_circular_interval(const IntervalRepresentation& rep, const Graph& g) {
    if (rep.kind != IntervalRepresentation::Kind::Circular)
        throw contract_error("color_circular_interval: representation not circular");
    if (!rep.consistent_with(g))
        throw contract_error("color_circular_interval: representation inconsistent with graph");
    int n = g.n();
    if (n == 0) return Coloring{};

    // tail positions covered by the high side of any wrapping interval;
    // they form a clique and may be pre-colored canonically
    int tail_start = n;
    for (const auto& [a, b] : rep.intervals)
        if (a > b) tail_start = std::min(tail_start, a);

    if (tail_start == n) {
        // no wrap: it is a linear instance
        IntervalRepresentation lin = rep;
        lin.kind = IntervalRepresentation::Kind::Linear;
        return color_linear_interval(lin, g);
    }

    int omega = oracle::clique_number(g);
    int tail = n - tail_start;
    for (int k = std::max(omega, tail); k <= g.max_degree() + 1; ++k) {
        std::vector<int> color(n, -1);
        for (int p = tail_start; p < n; ++p) color[rep.order[p]] = p - tail_start;
        std::vector<int> order_head(rep.order.begin(), rep.order.begin() + tail_start);
        if (complete_in_order(g, order_head, k, color, 0)) {
            Coloring c;
            c.color = color;
            return c;
        }
    }
    throw contract_error("color_circular_interval: search failed below Delta+1");
}

std::optional<Coloring> color_linear_interval_with_lists(
    const Graph& g, const std::vector<int>& order, int k,
    const std::vector<std::vector<char>>& allowed) {
    struct Rec {
        const Graph& g;
        const std::vector<int>& order;
        int k;
        const std::vector<std::vector<char>>& allowed;
        std::vector<int>& color;

        bool go(size_t idx) {
            if (idx == order.size()) return true;
            int v = order[idx];
            Bitset taken(k);
            CLAW_FOR_SET(u, g.neighbors(v)) {
                if (color[u] >= 0 && color[u] < k) taken.add(color[u]);
            }
            for (int c = 0; c < k; ++c) {
                if (taken.contains(c) || !allowed[v][c]) continue;
                color[v] = c;
                if (go(idx + 1)) return true;
                color[v] = -1;
            }
            return false;
        }
    };
    std::vector<int> color(g.n(), -1);
    Rec rec{g, order, k, allowed, color};
    if (!rec.go(0)) return std::nullopt;
    Coloring c;
    c.color = color;
    return c;
}

} // namespace colorers

} // namespace claw
