#include "claw/join.hpp"
#include "claw/interval.hpp"
#include "claw/oracle.hpp"

#include <algorithm>

namespace claw {

VertexSet JoinAnnotation::v2(int n) const {
    VertexSet s(n);
    s |= x2;
    s |= y2;
    for (const auto& [name, set] : strip_labels) s |= set;
    return s;
}

VertexSet JoinAnnotation::v1(int n) const {
    VertexSet s(n);
    s.fill();
    s -= v2(n);
    return s;
}

VertexSet JoinAnnotation::label(const std::string& name, int n) const {
    auto it = strip_labels.find(name);
    if (it == strip_labels.end()) return VertexSet(n);
    return it->second;
}

void JoinAnnotation::validate(const Graph& g) const {
    int n = g.n();
    VertexSet vv2 = v2(n);
    VertexSet vv1 = v1(n);
    if (!x1.subset_of(vv1) || !y1.subset_of(vv1))
        throw contract_error("JoinAnnotation: X1/Y1 must live in V1");
    if (!x2.subset_of(vv2) || !y2.subset_of(vv2))
        throw contract_error("JoinAnnotation: X2/Y2 must live in V2");
    if (x2.intersects(y2)) throw contract_error("JoinAnnotation: X2 and Y2 must be disjoint");
    if (!g.is_clique(x1 | x2)) throw contract_error("JoinAnnotation: X1 u X2 is not a clique");
    if (!g.is_clique(y1 | y2)) throw contract_error("JoinAnnotation: Y1 u Y2 is not a clique");
    // no other edges between V1 and V2
    CLAW_FOR_SET(v, vv2) {
        Bitset out = g.neighbors(v) & vv1;
        CLAW_FOR_SET(u, out) {
            bool covered = (x2.contains(v) && x1.contains(u)) ||
                           (y2.contains(v) && y1.contains(u));
            if (!covered)
                throw contract_error("JoinAnnotation: stray edge between V1 and V2");
        }
    }
    // X2 must see all of X1, Y2 all of Y1 (the joins are complete)
    CLAW_FOR_SET(v, x2) if (!x1.subset_of(g.neighbors(v)))
        throw contract_error("JoinAnnotation: X2 not complete to X1");
    CLAW_FOR_SET(v, y2) if (!y1.subset_of(g.neighbors(v)))
        throw contract_error("JoinAnnotation: Y2 not complete to Y1");
    // labels partition V2
    VertexSet seen(n);
    for (const auto& [name, set] : strip_labels) {
        if (set.intersects(seen))
            throw contract_error("JoinAnnotation: strip labels overlap");
        seen |= set;
    }
    if (!strip_labels.empty() && !(seen == vv2))
        throw contract_error("JoinAnnotation: strip labels do not cover V2");
    if (kind == Kind::CanonicalInterval) {
        if (int(strip_order.size()) != vv2.count())
            throw contract_error("JoinAnnotation: strip order must cover V2");
        Graph strip = induced(g, vv2);
        std::vector<int> old_to_new(n, -1);
        int idx = 0;
        CLAW_FOR_SET(v, vv2) old_to_new[v] = idx++;
        std::vector<int> order;
        for (int v : strip_order) order.push_back(old_to_new[v]);
        if (!is_linear_interval_order(strip, order))
            throw contract_error("JoinAnnotation: strip order is not a linear interval order");
        for (int i = 0; i < x2.count(); ++i)
            if (!x2.contains(strip_order[i]))
                throw contract_error("JoinAnnotation: X2 must be leftmost in the strip order");
        for (int i = 0; i < y2.count(); ++i)
            if (!y2.contains(strip_order[int(strip_order.size()) - 1 - i]))
                throw contract_error("JoinAnnotation: Y2 must be rightmost in the strip order");
        if (g.is_clique(vv2))
            throw contract_error("JoinAnnotation: canonical interval strip must not be a clique");
    }
}

std::string join_kind_name(JoinAnnotation::Kind k) {
    switch (k) {
    case JoinAnnotation::Kind::CanonicalInterval: return "canonical-interval";
    case JoinAnnotation::Kind::Antihat: return "antihat";
    case JoinAnnotation::Kind::Strange: return "strange";
    case JoinAnnotation::Kind::PseudoLine: return "pseudo-line";
    case JoinAnnotation::Kind::Gear: return "gear";
    }
    return "canonical-interval";
}

JoinAnnotation::Kind join_kind_from_name(const std::string& s) {
    if (s == "antihat") return JoinAnnotation::Kind::Antihat;
    if (s == "strange") return JoinAnnotation::Kind::Strange;
    if (s == "pseudo-line") return JoinAnnotation::Kind::PseudoLine;
    if (s == "gear") return JoinAnnotation::Kind::Gear;
    if (s == "canonical-interval") return JoinAnnotation::Kind::CanonicalInterval;
    throw contract_error("unknown join kind: " + s);
}

JoinContext compute_join_context(const Graph& g, const JoinAnnotation& j) {
    j.validate(g);
    int n = g.n();
    VertexSet h2 = j.v2(n) | j.x1 | j.y1;
    VertexSet x_only = j.x1 - j.y1;
    VertexSet y_only = j.y1 - j.x1;

    Graph sub;
    std::vector<int> old_to_new, new_to_old;
    sub = induced(g, h2, &old_to_new, &new_to_old);

    auto clique_through_avoiding = [&](int v, const VertexSet& avoid) {
        if (avoid.contains(v)) return 0;
        VertexSet allowed(n);
        allowed = h2 - avoid;
        // restrict to the induced subgraph
        VertexSet allowed_sub(sub.n());
        CLAW_FOR_SET(u, allowed) allowed_sub.add(old_to_new[u]);
        return oracle::max_clique_through(sub, old_to_new[v], allowed_sub);
    };

    JoinContext ctx;
    int max_deg = 0, max_omega = 0;
    CLAW_FOR_SET(v, h2) {
        int w = std::max(clique_through_avoiding(v, x_only), clique_through_avoiding(v, y_only));
        ctx.omega_prime[v] = w;
        int d = g.degree(v);
        ctx.gamma_lj = std::max(ctx.gamma_lj, (d + 1 + w + 1) / 2);
        max_deg = std::max(max_deg, d);
        max_omega = std::max(max_omega, w);
    }
    ctx.gamma_gj = (max_deg + 1 + max_omega + 1) / 2;
    return ctx;
}

} // namespace claw
