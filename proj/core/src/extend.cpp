#include "claw/struct_color.hpp"

#include "claw/detect.hpp"
#include "claw/oracle.hpp"
#include "claw/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace claw::colorers {

namespace {

// ------------------------------------------------------------------ helpers

/// Backtracking completion: color `order` vertices with palette colors,
/// honoring every already-colored neighbor in g. color[v] == -1 marks
/// uncolored. Returns false if no completion exists.
bool complete_with_palette(const Graph& g, const std::vector<int>& order,
                           const Bitset& palette, std::vector<int>& color, size_t idx = 0) {
    if (idx == order.size()) return true;
    int v = order[idx];
    Bitset taken(palette.universe());
    CLAW_FOR_SET(u, g.neighbors(v)) {
        if (color[u] >= 0 && color[u] < palette.universe()) taken.add(color[u]);
    }
    Bitset options = palette - taken;
    CLAW_FOR_SET(c, options) {
        color[v] = c;
        if (complete_with_palette(g, order, palette, color, idx + 1)) return true;
    }
    color[v] = -1;
    return false;
}

/// Shared state for the peeling extensions. Vertices keep their global ids;
/// stripped color classes leave `alive` and retire their color from `avail`.
struct ExtState {
    const Graph& g;
    JoinAnnotation ann; // labels may be renamed by automorphism normalizations
    int l;
    std::vector<int> color; // -1 while uncolored
    Bitset alive;
    Bitset avail;

    ExtState(const Graph& g, const JoinAnnotation& ann, const Coloring& c1, int l)
        : g(g), ann(ann), l(l), color(g.n(), -1), alive(g.n()), avail(l) {
        alive.fill();
        avail.fill();
        VertexSet v1 = ann.v1(g.n());
        CLAW_FOR_SET(v, v1) {
            if (v >= int(c1.color.size()) || c1.color[v] < 0 || c1.color[v] >= l)
                throw contract_error("extension: c1 must color V1 with colors below l");
            color[v] = c1.color[v];
        }
        Graph g1 = induced(g, v1);
        // proper on G1
        std::vector<int> back;
        induced(g, v1, nullptr, &back);
        Coloring check;
        check.color.resize(g1.n());
        for (int i = 0; i < g1.n(); ++i) check.color[i] = color[back[i]];
        if (!check_coloring(g1, check))
            throw contract_error("extension: c1 is not proper on G1");
    }

    /// Copy the mutable fields from another state over the same graph.
    void adopt(const ExtState& o) {
        ann = o.ann;
        l = o.l;
        color = o.color;
        alive = o.alive;
        avail = o.avail;
    }

    Bitset la(const std::string& name) const { return ann.label(name, g.n()) & alive; }
    Bitset sa(const VertexSet& s) const { return s & alive; }

    Bitset colors_on(const VertexSet& s) const {
        Bitset out(l);
        Bitset t = s & alive;
        CLAW_FOR_SET(v, t) if (color[v] >= 0) out.add(color[v]);
        return out;
    }

    Bitset class_of(int c) const {
        Bitset out(g.n());
        CLAW_FOR_SET(v, alive) if (color[v] == c) out.add(v);
        return out;
    }

    void strip_class(int c, const std::vector<int>& extra) {
        Bitset cls = class_of(c);
        for (int v : extra) {
            color[v] = c;
            cls.add(v);
        }
        alive -= cls;
        avail.remove(c);
    }

    Bitset x1a() const { return sa(ann.x1); }
    Bitset y1a() const { return sa(ann.y1); }
    Bitset x2a() const { return sa(ann.x2); }
    Bitset y2a() const { return sa(ann.y2); }
    Bitset v2a() const { return sa(ann.v2(g.n())); }
    Bitset z2a() const { return v2a() - ann.x2 - ann.y2; }

    /// Colors on X1 but not Y1 (alive), ascending.
    Bitset side_only_colors(bool x_side) const {
        Bitset cx = colors_on(ann.x1), cy = colors_on(ann.y1);
        return x_side ? cx - cy : cy - cx;
    }
    int shared_k() const { return colors_on(ann.x1).count_and(colors_on(ann.y1)); }

    Coloring finish() const {
        Coloring out;
        out.color = color;
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] < 0 || out.color[v] >= l)
                throw coloring_failure("extension: vertex left uncolored");
        if (!check_coloring(g, out)) throw coloring_failure("extension: improper result");
        return out;
    }
};

/// Colored G1-neighborhood colors of a host vertex.
Bitset host_neighbor_colors(const ExtState& st, int v) {
    Bitset out(st.l);
    Bitset nb = st.g.neighbors(v) & st.alive;
    CLAW_FOR_SET(u, nb) if (st.color[u] >= 0) out.add(st.color[u]);
    return out;
}

/// Make the number of colors shared by X1 and Y1 minimal by single-vertex
/// recolorings (antihat/strange normal form).
void minimize_k(ExtState& st) {
    bool moved = true;
    while (moved) {
        moved = false;
        Bitset both = st.colors_on(st.ann.x1) & st.colors_on(st.ann.y1);
        Bitset xy = st.sa(st.ann.x1) | st.sa(st.ann.y1);
        CLAW_FOR_SET(v, xy) {
            if (!both.contains(st.color[v])) continue;
            Bitset forbidden = st.colors_on(st.ann.x1) | st.colors_on(st.ann.y1);
            forbidden |= host_neighbor_colors(st, v);
            Bitset options = st.avail - forbidden;
            int i = options.first();
            if (i >= 0) {
                st.color[v] = i;
                moved = true;
                break;
            }
        }
    }
}

/// Make the shared count maximal (gear/pseudo-line normal form).
void maximize_k(ExtState& st) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int side = 0; side < 2 && !moved; ++side) {
            Bitset own = side == 0 ? st.sa(st.ann.x1) : st.sa(st.ann.y1);
            Bitset other_colors = st.colors_on(side == 0 ? st.ann.y1 : st.ann.x1);
            Bitset own_colors = st.colors_on(side == 0 ? st.ann.x1 : st.ann.y1);
            Bitset gains = other_colors - own_colors;
            CLAW_FOR_SET(v, own) {
                if (other_colors.contains(st.color[v])) continue;
                Bitset options = gains - host_neighbor_colors(st, v);
                int i = options.first();
                if (i >= 0) {
                    st.color[v] = i;
                    moved = true;
                    break;
                }
            }
        }
    }
}

/// Endpoints in p of alive cross edges between p and q.
Bitset omega_side(const ExtState& st, const VertexSet& p, const VertexSet& q) {
    Bitset out(st.g.n());
    Bitset pa = st.sa(p), qa = st.sa(q);
    CLAW_FOR_SET(u, pa) if (st.g.neighbors(u).intersects(qa)) out.add(u);
    return out;
}

/// Nonadjacent alive pair (p, q) with p in P-labels and q in Q-labels,
/// preferring pairs that intersect the skeletal join of their class pair
/// when that join is nonempty.
std::optional<std::pair<int, int>> choose_stable_pair(const ExtState& st,
                                                      const std::vector<std::string>& p_labels,
                                                      const std::vector<std::string>& q_labels) {
    std::optional<std::pair<int, int>> fallback;
    for (const auto& pl : p_labels) {
        Bitset P = st.la(pl);
        if (P.empty()) continue;
        for (const auto& ql : q_labels) {
            Bitset Q = st.la(ql);
            if (Q.empty()) continue;
            Bitset op = omega_side(st, P, Q);
            Bitset oq = omega_side(st, Q, P);
            bool has_join = !op.empty();
            CLAW_FOR_SET(u, P) {
                Bitset nonnb = Q - st.g.neighbors(u);
                int v = nonnb.first();
                if (v < 0) continue;
                if (!has_join) return std::make_pair(u, v);
                if (op.contains(u)) return std::make_pair(u, v);
                // try to hit the join from the q side
                Bitset vq = nonnb & oq;
                if (!vq.empty()) return std::make_pair(u, vq.first());
                if (!fallback) fallback = std::make_pair(u, v);
            }
        }
    }
    return fallback;
}

/// Assign each class of a strip coloring a distinct avail color such that
/// classes touching X2 avoid the colors on X1 and classes touching Y2 avoid
/// those on Y1. Writes into st on success.
bool sdr_complete(ExtState& st, const std::vector<Bitset>& strip_classes) {
    Bitset cx1 = st.colors_on(st.ann.x1);
    Bitset cy1 = st.colors_on(st.ann.y1);
    std::vector<std::vector<int>> adj(strip_classes.size());
    auto avail_list = st.avail.to_vector();
    std::map<int, int> color_pos;
    for (int i = 0; i < int(avail_list.size()); ++i) color_pos[avail_list[i]] = i;
    for (size_t i = 0; i < strip_classes.size(); ++i) {
        Bitset allowed = st.avail;
        if (strip_classes[i].intersects(st.ann.x2)) allowed -= cx1;
        if (strip_classes[i].intersects(st.ann.y2)) allowed -= cy1;
        CLAW_FOR_SET(c, allowed) adj[i].push_back(color_pos[c]);
    }
    auto m = oracle::max_bipartite_matching(int(strip_classes.size()), int(avail_list.size()), adj);
    if (m.size() < int(strip_classes.size())) return false;
    for (auto [i, pos] : m.edges) {
        CLAW_FOR_SET(v, strip_classes[i]) st.color[v] = avail_list[pos];
    }
    return true;
}

/// Color the alive strip as a three-cliqued graph: good-triad peeling with
/// an exact fallback. Returns color classes over global vertex ids.
std::vector<Bitset> strip_color_classes(const ExtState& st, const ColorOptions& opts) {
    Bitset strip = st.v2a();
    std::vector<int> back;
    Graph sub = induced(st.g, strip, nullptr, &back);
    std::optional<Coloring> c = peel_good_triads(sub, opts.triad_budget);
    if (!c) {
        if (sub.n() > opts.oracle_cap)
            throw coloring_failure("extension: strip colorer stalled beyond oracle cap");
        Coloring exact;
        oracle::chromatic_number(sub, &exact);
        c = exact;
    }
    std::vector<Bitset> classes(c->k(), Bitset(st.g.n()));
    for (int i = 0; i < sub.n(); ++i) classes[c->color[i]].add(back[i]);
    // drop empty classes (colors may be non-contiguous after peeling)
    std::vector<Bitset> out;
    for (auto& cls : classes)
        if (!cls.empty()) out.push_back(cls);
    return out;
}

/// View of the alive graph after its pairs were reduced to skeletal; block
/// builders use it to lay out the strip on the reduced adjacency.
struct ReducedView {
    const Graph& rg;
    const std::vector<int>& old_to_new;
    const ExtState& st;

    Bitset map(const VertexSet& full_set) const {
        Bitset out(rg.n());
        Bitset t = full_set & st.alive;
        CLAW_FOR_SET(v, t) out.add(old_to_new[v]);
        return out;
    }
    /// [p without the join, p's join endpoints] against q, on the reduced graph.
    std::pair<Bitset, Bitset> split(const VertexSet& p, const VertexSet& q) const {
        Bitset pm = map(p), qm = map(q);
        Bitset join(rg.n());
        CLAW_FOR_SET(u, pm) if (rg.neighbors(u).intersects(qm)) join.add(u);
        return {pm - join, join};
    }
};

/// Terminal move shared by several branches: reduce the given homogeneous
/// pairs inside the alive graph to skeletal (when needed), order the strip
/// by the left-to-right blocks built on the reduced graph, and finish by
/// backtracking with the available palette. The host part keeps its colors.
void canonical_terminal(ExtState& st,
                        const std::vector<std::pair<VertexSet, VertexSet>>& pairs,
                        const std::function<std::vector<Bitset>(const ReducedView&)>& blocks_fn) {
    std::vector<int> old_to_new, back;
    Graph sub = induced(st.g, st.alive, &old_to_new, &back);
    std::vector<int> subcolor(sub.n(), -1);
    for (int i = 0; i < sub.n(); ++i) subcolor[i] = st.color[back[i]];

    auto map_set = [&](const VertexSet& s) {
        Bitset out(sub.n());
        Bitset t = s & st.alive;
        CLAW_FOR_SET(v, t) out.add(old_to_new[v]);
        return out;
    };

    reduce::ReductionTrace trace;
    Graph cur = sub;
    for (auto& [a, b] : pairs) {
        Bitset am = map_set(a), bm = map_set(b);
        if (am.empty() || bm.empty() || am.count() + bm.count() < 3) continue;
        if (!detect::is_homogeneous_pair_of_cliques(cur, am, bm))
            throw coloring_failure("canonical terminal: expected homogeneous pair");
        if (detect::classify_pair(cur, am, bm) == detect::PairKind::Skeletal) continue;
        auto [next, step] = reduce::skeletal_reduce_pair(cur, am, bm);
        cur = std::move(next);
        trace.steps.push_back(std::move(step));
    }

    ReducedView view{cur, old_to_new, st};
    std::vector<int> order;
    for (const auto& block : blocks_fn(view)) {
        CLAW_FOR_SET(v, block) order.push_back(v);
    }
    // sanity: the order must cover exactly the alive strip
    if (int(order.size()) != st.v2a().count())
        throw coloring_failure("canonical terminal: block order does not cover the strip");
    {
        // verify the order is a linear interval order of the reduced strip
        Bitset stripm = map_set(st.v2a());
        std::vector<int> strip_back, strip_fwd(cur.n(), -1);
        Graph strip_sub = induced(cur, stripm, nullptr, &strip_back);
        for (int i = 0; i < int(strip_back.size()); ++i) strip_fwd[strip_back[i]] = i;
        std::vector<int> strip_order;
        for (int v : order) strip_order.push_back(strip_fwd[v]);
        if (!is_linear_interval_order(strip_sub, strip_order))
            throw coloring_failure("canonical terminal: blocks are not a linear interval order");
    }

    if (!complete_with_palette(cur, order, st.avail, subcolor))
        throw coloring_failure("canonical terminal: no completion within the palette");

    Coloring lifted;
    lifted.color = subcolor;
    lifted = reduce::lift_through_trace(sub, trace, lifted);
    for (int i = 0; i < sub.n(); ++i) st.color[back[i]] = lifted.color[i];
}

// --------------------------------------------------------- canonical interval

Coloring do_extend_canonical(const Graph& g, const JoinAnnotation& j, const Coloring& c1,
                             int l) {
    ExtState st(g, j, c1, l);
    std::vector<int> order = j.strip_order;
    Bitset palette(l);
    palette.fill();
    if (!complete_with_palette(g, order, palette, st.color))
        throw coloring_failure("extend_canonical_interval: no completion at l");
    return st.finish();
}

// ----------------------------------------------------------------- antihat

/// Label groups of the strip sides, by name, present or not.
std::vector<std::string> labels_inside(const JoinAnnotation& ann, const VertexSet& side) {
    std::vector<std::string> out;
    for (const auto& [name, set] : ann.strip_labels)
        if (set.intersects(side)) out.push_back(name);
    return out;
}

Coloring do_extend_antihat(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                           const ColorOptions& opts, bool normalize) {
    ExtState st(g, j, c1, l);
    if (normalize) minimize_k(st);
    int n = g.n();

    VertexSet z2 = j.v2(n) - j.x2 - j.y2;
    auto y_labels = labels_inside(j, j.y2);
    auto z_labels = labels_inside(j, z2);
    auto x_labels = labels_inside(j, j.x2);

    // peel colors confined to one host side along with a stable strip pair
    for (int side = 0; side < 2; ++side) {
        bool x_side = side == 0;
        while (true) {
            Bitset only = st.side_only_colors(x_side);
            if (only.empty()) break;
            auto pair = x_side ? choose_stable_pair(st, y_labels, z_labels)
                               : choose_stable_pair(st, x_labels, z_labels);
            if (!pair) break; // that side of the strip became a clique
            st.strip_class(only.first(), {pair->first, pair->second});
        }
    }

    // terminal: distinct-color completion when it fits, otherwise reduce
    // (X2, Y2) to a skeletal pair and finish as a canonical interval strip
    if (st.v2a().empty()) return st.finish();
    {
        ExtState attempt = st;
        auto classes = strip_color_classes(attempt, opts);
        if (sdr_complete(attempt, classes)) return attempt.finish();
    }
    canonical_terminal(st, {{st.x2a(), st.y2a()}}, [&](const ReducedView& view) {
        auto [x_out, x_join] = view.split(st.ann.x2, st.ann.y2);
        auto [y_out, y_join] = view.split(st.ann.y2, st.ann.x2);
        return std::vector<Bitset>{x_out, x_join, view.map(st.z2a()), y_join, y_out};
    });
    return st.finish();
}

// ------------------------------------------------------------------ strange

Coloring do_extend_strange(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                           const ColorOptions& opts, bool normalize) {
    ExtState st(g, j, c1, l);
    if (normalize) minimize_k(st);

    // t = min(|I(a1)|, |I(c1) n Omega(c1, b3)|, |Y2| - k) peels of Y1-only
    // colors, each with one vertex of I(a1) and one of I(c1) n Omega(c1, b3)
    int k = st.shared_k();
    int t_cap = st.y2a().count() - k;
    int peeled = 0;
    while (peeled < t_cap) {
        Bitset only = st.side_only_colors(false);
        if (only.empty()) break;
        Bitset a1 = st.la("a1");
        Bitset c1o = omega_side(st, st.la("c1"), st.la("b3")) & st.la("c1");
        if (a1.empty() || c1o.empty()) break;
        st.strip_class(only.first(), {a1.first(), c1o.first()});
        ++peeled;
    }

    if (st.v2a().empty()) return st.finish();

    if (st.la("a1").empty()) {
        // fuzzy linear interval branch: reduce (Z2, Y2), order X2 Z2 Y2
        Bitset z2 = st.z2a();
        canonical_terminal(st, {{z2, st.y2a()}}, [&](const ReducedView& view) {
            auto [z_out, z_join] = view.split(z2, st.ann.y2);
            auto [y_out, y_join] = view.split(st.ann.y2, z2);
            return std::vector<Bitset>{view.map(st.x2a()), z_out, z_join, y_join, y_out};
        });
        return st.finish();
    }

    Bitset c1o = omega_side(st, st.la("c1"), st.la("b3")) & st.la("c1");
    if (c1o.empty() && !st.la("c1").empty() && !st.la("b3").empty()) {
        // I(b3) is simplicial now; color the rest as an antihat strip, then
        // give the simplicial vertices leftover colors greedily
        Bitset b3 = st.la("b3");
        ExtState rest = st;
        rest.alive -= b3;
        JoinAnnotation sub = rest.ann;
        sub.kind = JoinAnnotation::Kind::Antihat;
        sub.y2 = st.y2a() - b3;
        // labels keep their names; extend_antihat is adjacency-driven
        rest.ann = sub;

        // run the antihat peeling inline on the narrowed state
        auto y_labels2 = labels_inside(sub, sub.y2);
        auto z_labels2 = labels_inside(sub, rest.z2a() | b3); // b3 removed from play anyway
        auto x_labels2 = labels_inside(sub, sub.x2);
        for (int side = 0; side < 2; ++side) {
            bool x_side = side == 0;
            while (true) {
                Bitset only = rest.side_only_colors(x_side);
                if (only.empty()) break;
                auto pair = x_side ? choose_stable_pair(rest, y_labels2, z_labels2)
                                   : choose_stable_pair(rest, x_labels2, z_labels2);
                if (!pair) break;
                rest.strip_class(only.first(), {pair->first, pair->second});
            }
        }
        bool done = false;
        if (!rest.v2a().empty()) {
            ExtState attempt = rest;
            auto classes = strip_color_classes(attempt, opts);
            if (sdr_complete(attempt, classes)) {
                rest.adopt(attempt);
                done = true;
            }
            if (!done) {
                canonical_terminal(rest, {{rest.x2a(), rest.y2a()}},
                                   [&](const ReducedView& view) {
                                       auto [x_out, x_join] =
                                           view.split(rest.ann.x2, rest.ann.y2);
                                       auto [y_out, y_join] =
                                           view.split(rest.ann.y2, rest.ann.x2);
                                       return std::vector<Bitset>{x_out, x_join,
                                                                  view.map(rest.z2a()),
                                                                  y_join, y_out};
                                   });
            }
        }
        // greedy colors for the simplicial class
        st.color = rest.color;
        CLAW_FOR_SET(v, b3) {
            Bitset taken(l);
            CLAW_FOR_SET(u, g.neighbors(v)) if (st.color[u] >= 0) taken.add(st.color[u]);
            Bitset options = rest.avail - taken;
            int c = options.first();
            if (c < 0) throw coloring_failure("extend_strange: no color for simplicial vertex");
            st.color[v] = c;
        }
        return st.finish();
    }

    // remaining colors fit directly or via the generic antihat-style finish
    {
        ExtState attempt = st;
        auto classes = strip_color_classes(attempt, opts);
        if (sdr_complete(attempt, classes)) return attempt.finish();
    }
    Bitset z2f = st.z2a();
    canonical_terminal(st, {{z2f, st.y2a()}}, [&](const ReducedView& view) {
        auto [z_out, z_join] = view.split(z2f, st.ann.y2);
        auto [y_out2, y_join2] = view.split(st.ann.y2, z2f);
        return std::vector<Bitset>{view.map(st.x2a()), z_out, z_join, y_join2, y_out2};
    });
    return st.finish();
}

// --------------------------------------------------------------------- gear

/// Relabel gear classes along a base automorphism. swap_ends exchanges the
/// roles of the X and Y sides of the join.
void gear_relabel(ExtState& st, const std::map<std::string, std::string>& perm,
                  bool swap_ends) {
    std::map<std::string, VertexSet> labels;
    for (const auto& [name, set] : st.ann.strip_labels) {
        auto it = perm.find(name);
        labels[it == perm.end() ? name : it->second] = set;
    }
    st.ann.strip_labels = std::move(labels);
    int n = st.g.n();
    st.ann.x2 = st.ann.label("v1", n) | st.ann.label("v2", n);
    st.ann.y2 = st.ann.label("v4", n) | st.ann.label("v5", n);
    if (swap_ends) std::swap(st.ann.x1, st.ann.y1);
}

const std::map<std::string, std::string> kGearRho = {
    {"v1", "v2"}, {"v2", "v1"}, {"v3", "v6"}, {"v6", "v3"},
    {"v4", "v5"}, {"v5", "v4"}, {"v9", "v10"}, {"v10", "v9"}};
const std::map<std::string, std::string> kGearSigma = {
    {"v1", "v5"}, {"v5", "v1"}, {"v2", "v4"}, {"v4", "v2"},
    {"v7", "v8"}, {"v8", "v7"}, {"v9", "v10"}, {"v10", "v9"}};
const std::map<std::string, std::string> kGearTau = {
    {"v1", "v4"}, {"v4", "v1"}, {"v2", "v5"}, {"v5", "v2"},
    {"v3", "v6"}, {"v6", "v3"}, {"v7", "v8"}, {"v8", "v7"}};

Coloring do_extend_gear(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts, bool normalize);

/// Case-1 terminal: v6 and v9 empty; reduce (I(v7), I(v8)) and
/// (I(v3) u I(v10), I(v4) u I(v5)); linear order v1 v2 v7 [v3 v10] v8 [v4 v5].
void gear_fuzzy_linear(ExtState& st) {
    Bitset A = st.la("v3") | st.la("v10");
    Bitset B = st.la("v4") | st.la("v5");
    Bitset v7 = st.la("v7"), v8 = st.la("v8");
    canonical_terminal(st, {{v7, v8}, {A, B}}, [&](const ReducedView& view) {
        auto [s7_out, s7_join] = view.split(v7, v8);
        auto [s8_out, s8_join] = view.split(v8, v7);
        auto [a_out, a_join] = view.split(A, B);
        auto [b_out, b_join] = view.split(B, A);
        return std::vector<Bitset>{view.map(st.la("v1")), view.map(st.la("v2")),
                                   s7_out, s7_join, a_out, a_join, s8_join, s8_out,
                                   b_join, b_out};
    });
}

/// Greedy-extend the host coloring onto the given strip vertices.
void greedy_color(ExtState& st, const Bitset& target) {
    CLAW_FOR_SET(v, target) {
        Bitset taken(st.l);
        Bitset nb = st.g.neighbors(v) & st.alive;
        CLAW_FOR_SET(u, nb) if (st.color[u] >= 0) taken.add(st.color[u]);
        Bitset options = st.avail - taken;
        int c = options.first();
        if (c < 0) throw coloring_failure("gear: greedy host extension ran out of colors");
        st.color[v] = c;
    }
}

Coloring do_extend_gear(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts, bool normalize) {
    ExtState st(g, j, c1, l);
    int n = g.n();

    // 1-join base case: one host clique empty; the strip hangs on the other
    if (st.x1a().empty() || st.y1a().empty()) {
        ExtState attempt = st;
        auto classes = strip_color_classes(attempt, opts);
        if (!sdr_complete(attempt, classes))
            throw coloring_failure("gear: 1-join completion failed");
        return attempt.finish();
    }

    if (normalize) maximize_k(st);

    while (true) {
        if (st.v2a().empty()) return st.finish();
        // normalize: prefer I(v10) nonempty over I(v9) when exactly one lives
        if (st.la("v10").empty() && !st.la("v9").empty())
            gear_relabel(st, kGearRho, /*swap_ends=*/false);

        Bitset shared = st.colors_on(st.ann.x1) & st.colors_on(st.ann.y1);
        if (!shared.empty()) {
            // Case 1: strip a both-sides color class with a strip diad
            if (!st.la("v9").empty() && !st.la("v10").empty()) {
                st.strip_class(shared.first(),
                               {st.la("v9").first(), st.la("v10").first()});
                continue;
            }
            if (!st.la("v3").empty() && !st.la("v6").empty()) {
                st.strip_class(shared.first(),
                               {st.la("v3").first(), st.la("v6").first()});
                if (!st.la("v3").empty() && !st.la("v6").empty()) continue;
                // one of the pivots emptied: normalize to v6 empty, v9 empty
                if (st.la("v6").empty() && !st.la("v3").empty()) {
                } else {
                    gear_relabel(st, kGearRho, false); // v3 empty -> v6 empty
                }
                if (st.la("v9").empty() || st.la("v10").empty()) {
                    if (!st.la("v9").empty()) gear_relabel(st, kGearSigma, true);
                    gear_fuzzy_linear(st);
                    return st.finish();
                }
                continue;
            }
            // both diad sources exhausted on one side: fuzzy linear terminal
            if (st.la("v6").empty() || st.la("v3").empty()) {
                if (st.la("v3").empty()) gear_relabel(st, kGearRho, false);
                if (!st.la("v9").empty()) gear_relabel(st, kGearSigma, true);
                gear_fuzzy_linear(st);
                return st.finish();
            }
            throw coloring_failure("gear: no diad available in case 1");
        }

        int free_colors = st.avail.count() - st.x1a().count() - st.y1a().count();
        if (free_colors > 0) {
            // Case 2: strip a color missing both sides with a strip triad
            Bitset hostless = st.avail - st.colors_on(st.ann.x1) - st.colors_on(st.ann.y1);
            if (hostless.empty())
                throw coloring_failure("gear: expected a color missing both host cliques");
            int cl = hostless.first();
            if (!st.la("v10").empty()) {
                if (st.la("v1").empty() || st.la("v4").empty())
                    throw coloring_failure("gear: case 2 pivot classes empty");
                st.strip_class(cl, {st.la("v10").first(), st.la("v1").first(),
                                    st.la("v4").first()});
            } else {
                // both v9 and v10 empty
                if (st.la("v1").empty() || st.la("v3").empty() || st.la("v5").empty())
                    throw coloring_failure("gear: case 2 fallback classes empty");
                st.strip_class(cl, {st.la("v1").first(), st.la("v3").first(),
                                    st.la("v5").first()});
                if (st.la("v3").empty()) {
                    // v3, v9, v10 empty: map v3 -> v6 and finish fuzzy linear
                    gear_relabel(st, kGearTau, true);
                    if (!st.la("v9").empty()) gear_relabel(st, kGearSigma, true);
                    gear_fuzzy_linear(st);
                    return st.finish();
                }
                if (st.la("v5").empty() && !st.la("v1").empty())
                    gear_relabel(st, kGearSigma, true); // v5 empty -> v1 empty
            }
            bool v1_empty = st.la("v1").empty(), v4_empty = st.la("v4").empty();
            if (!v1_empty && !v4_empty) continue;
            if (v1_empty && v4_empty) {
                // host side grows by I(v2), I(v5), I(v10); the rest is fuzzy linear
                greedy_color(st, st.la("v10"));
                greedy_color(st, st.la("v2"));
                greedy_color(st, st.la("v5"));
                Bitset A = st.la("v3") | st.la("v7");
                Bitset B = st.la("v6") | st.la("v8");
                Bitset v9 = st.la("v9");
                // the freshly colored classes become hosts of the residual join
                ExtState sub = st;
                sub.ann.x1 = st.la("v2") | st.la("v10");
                sub.ann.y1 = st.la("v5") | st.la("v10");
                sub.ann.x2 = A;
                sub.ann.y2 = B;
                sub.ann.strip_labels.clear();
                if (!v9.empty()) sub.ann.strip_labels["v9"] = v9;
                canonical_terminal(sub, {{A, B}}, [&](const ReducedView& view) {
                    auto [a_out, a_join] = view.split(A, B);
                    auto [b_out, b_join] = view.split(B, A);
                    return std::vector<Bitset>{a_out, a_join, view.map(v9), b_join, b_out};
                });
                st.color = sub.color;
                return st.finish();
            }
            if (v4_empty) gear_relabel(st, kGearTau, true); // now v1 is the empty one
            // antihat reroute: strip = v3 v7 v10 | v4 v5 | v6 v8 v9
            greedy_color(st, st.la("v2"));
            ExtState sub = st;
            sub.ann.kind = JoinAnnotation::Kind::Antihat;
            sub.ann.x1 = st.la("v2");
            sub.ann.y1 = st.y1a();
            sub.ann.x2 = st.la("v3") | st.la("v7") | st.la("v10");
            sub.ann.y2 = st.la("v4") | st.la("v5");
            std::map<std::string, VertexSet> labels;
            labels["a1"] = st.la("v3");
            labels["a2"] = st.la("v10");
            labels["a3"] = st.la("v7");
            labels["b1"] = st.la("v4");
            labels["b2"] = st.la("v5");
            labels["c1"] = st.la("v6");
            labels["c2"] = st.la("v9");
            labels["c3"] = st.la("v8");
            sub.ann.strip_labels.clear();
            for (auto& [name, set] : labels)
                if (!set.empty()) sub.ann.strip_labels[name] = set;

            auto y_labels = labels_inside(sub.ann, sub.ann.y2);
            auto z_labels = labels_inside(sub.ann, sub.z2a());
            auto x_labels = labels_inside(sub.ann, sub.ann.x2);
            for (int side = 0; side < 2; ++side) {
                bool x_side = side == 0;
                while (true) {
                    Bitset only = sub.side_only_colors(x_side);
                    if (only.empty()) break;
                    auto pair = x_side ? choose_stable_pair(sub, y_labels, z_labels)
                                       : choose_stable_pair(sub, x_labels, z_labels);
                    if (!pair) break;
                    sub.strip_class(only.first(), {pair->first, pair->second});
                }
            }
            if (!sub.v2a().empty()) {
                ExtState attempt = sub;
                auto classes = strip_color_classes(attempt, opts);
                if (sdr_complete(attempt, classes)) {
                    sub.adopt(attempt);
                } else {
                    canonical_terminal(sub, {{sub.x2a(), sub.y2a()}},
                                       [&](const ReducedView& view) {
                                           auto [x_out, x_join] =
                                               view.split(sub.ann.x2, sub.ann.y2);
                                           auto [y_out, y_join] =
                                               view.split(sub.ann.y2, sub.ann.x2);
                                           return std::vector<Bitset>{
                                               x_out, x_join, view.map(sub.z2a()), y_join,
                                               y_out};
                                       });
                }
            }
            st.color = sub.color;
            return st.finish();
        }

        // Case 3: every color appears exactly once on X1 u Y1
        Bitset z2 = st.z2a();
        std::vector<int> zback;
        Graph zsub = induced(g, z2, nullptr, &zback);
        Coloring zc = color_alpha2(zsub);
        // remove the size-2 classes; the rest of Z2 is a clique
        std::vector<Bitset> s_pairs;
        {
            std::map<int, std::vector<int>> by_color;
            for (int i = 0; i < zsub.n(); ++i) by_color[zc.color[i]].push_back(zback[i]);
            for (auto& [c, members] : by_color)
                if (members.size() == 2)
                    s_pairs.push_back(Bitset::of(n, members));
        }
        int t = int(s_pairs.size());
        Bitset s_all(n);
        for (auto& p : s_pairs) s_all |= p;

        // auxiliary cobipartite graph: G2 - S plus a complete X2/Y2 join
        Bitset g2s = st.v2a() - s_all;
        std::vector<int> aback;
        Graph aux = induced(g, g2s, nullptr, &aback);
        std::vector<int> afwd(n, -1);
        for (int i = 0; i < aux.n(); ++i) afwd[aback[i]] = i;
        CLAW_FOR_SET(u, st.x2a()) CLAW_FOR_SET(v, st.y2a()) {
            if (afwd[u] >= 0 && afwd[v] >= 0 && !aux.adjacent(afwd[u], afwd[v]))
                aux.add_edge(afwd[u], afwd[v]);
        }
        if (oracle::clique_number(aux) > st.avail.count() - t)
            throw coloring_failure("gear: auxiliary clique exceeds the color budget");
        Coloring ac = color_alpha2(aux);
        std::vector<Bitset> classes(ac.k(), Bitset(n));
        for (int i = 0; i < aux.n(); ++i) classes[ac.color[i]].add(aback[i]);
        std::vector<Bitset> all_classes;
        for (auto& cls : classes)
            if (!cls.empty()) all_classes.push_back(cls);
        for (auto& p : s_pairs) all_classes.push_back(p);
        if (!sdr_complete(st, all_classes))
            throw coloring_failure("gear: case 3 assignment failed");
        return st.finish();
    }
}

// -------------------------------------------------------------- pseudo-line

struct PseudoLabel {
    std::string name;
    int centre; // -1 for e1/e2
    int column; // 0,1,2 for j1,j2,j3; e1 spans {0,1}, e2 spans {1,2}
};

std::vector<PseudoLabel> pseudo_labels(const JoinAnnotation& ann) {
    std::vector<PseudoLabel> out;
    for (const auto& [name, set] : ann.strip_labels) {
        if (name == "e1") out.push_back({name, -1, 0});
        else if (name == "e2") out.push_back({name, -1, 2});
        else {
            // t<i>_j<k>
            auto us = name.find('_');
            if (us == std::string::npos || name[0] != 't')
                throw contract_error("pseudo-line: unrecognized strip label " + name);
            int centre = std::stoi(name.substr(1, us - 1));
            int col = name[us + 2] - '1';
            out.push_back({name, centre, col});
        }
    }
    return out;
}

/// gamma_gj of the alive residual problem.
int residual_gamma_gj(const ExtState& st) {
    std::vector<int> old_to_new, back;
    Graph sub = induced(st.g, st.alive, &old_to_new, &back);
    JoinAnnotation sub_ann;
    sub_ann.kind = st.ann.kind;
    auto map_set = [&](const VertexSet& s) {
        Bitset out(sub.n());
        Bitset t = s & st.alive;
        CLAW_FOR_SET(v, t) out.add(old_to_new[v]);
        return out;
    };
    sub_ann.x1 = map_set(st.ann.x1);
    sub_ann.y1 = map_set(st.ann.y1);
    sub_ann.x2 = map_set(st.ann.x2);
    sub_ann.y2 = map_set(st.ann.y2);
    for (const auto& [name, set] : st.ann.strip_labels) {
        Bitset m = map_set(set);
        if (!m.empty()) sub_ann.strip_labels[name] = m;
    }
    JoinContext ctx = compute_join_context(sub, sub_ann);
    return ctx.gamma_gj;
}

Coloring do_extend_pseudo_line(const Graph& g, const JoinAnnotation& j, const Coloring& c1,
                               int l, const ColorOptions& opts, bool normalize) {
    ExtState st(g, j, c1, l);
    if (normalize) maximize_k(st);
    int n = g.n();
    auto plabels = pseudo_labels(j);

    while (true) {
        if (st.v2a().empty()) return st.finish();
        Bitset cx = st.colors_on(st.ann.x1), cy = st.colors_on(st.ann.y1);
        Bitset hostless = st.avail - cx - cy;
        if (hostless.empty()) {
            // direct finishes: all colors hit the host cliques
            Bitset x2 = st.x2a(), y2 = st.y2a(), z2 = st.z2a();
            Bitset x_pool = cy - cx; // X2 may use colors of Y1 only
            Bitset y_pool = cx - cy;
            if (z2.count() <= st.avail.count() - x2.count() - y2.count()) {
                if (x_pool.count() < x2.count() || y_pool.count() < y2.count())
                    throw coloring_failure("pseudo-line: side pools too small");
                auto assign_distinct = [&](const Bitset& verts, Bitset pool) {
                    CLAW_FOR_SET(v, verts) {
                        int c = pool.first();
                        st.color[v] = c;
                        pool.remove(c);
                    }
                    return pool;
                };
                assign_distinct(x2, x_pool);
                assign_distinct(y2, y_pool);
                Bitset rest = st.avail;
                CLAW_FOR_SET(v, x2) rest.remove(st.color[v]);
                CLAW_FOR_SET(v, y2) rest.remove(st.color[v]);
                if (rest.count() < z2.count())
                    throw coloring_failure("pseudo-line: Z2 pool too small");
                assign_distinct(z2, rest);
                return st.finish();
            }
            // cobipartite finish on X2 u Z2
            Bitset xz = x2 | z2;
            std::vector<int> back;
            Graph sub = induced(g, xz, nullptr, &back);
            Coloring sc = color_alpha2(sub);
            if (sc.colors_used() > st.avail.count() - y2.count())
                throw coloring_failure("pseudo-line: cobipartite clique exceeds budget");
            // Y2 takes X1-only colors; X2 u Z2 classes take the rest with
            // X2-classes avoiding X1 colors
            if (y_pool.count() < y2.count())
                throw coloring_failure("pseudo-line: Y2 pool too small");
            Bitset y_used(st.l);
            {
                Bitset pool = y_pool;
                CLAW_FOR_SET(v, y2) {
                    int c = pool.first();
                    st.color[v] = c;
                    pool.remove(c);
                    y_used.add(c);
                }
            }
            std::vector<Bitset> classes(sc.k(), Bitset(n));
            for (int i = 0; i < sub.n(); ++i) classes[sc.color[i]].add(back[i]);
            std::vector<Bitset> cls;
            for (auto& c : classes)
                if (!c.empty()) cls.push_back(c);
            ExtState pick = st; // sdr against the remaining palette
            pick.avail -= y_used;
            if (!sdr_complete(pick, cls))
                throw coloring_failure("pseudo-line: class assignment failed");
            pick.avail = st.avail;
            return pick.finish();
        }

        // a color class S misses both host cliques; find S2 lowering gamma_gj
        int cl = hostless.first();
        int centres_alive = 0;
        {
            std::map<int, int> seen;
            for (auto& lab : plabels)
                if (lab.centre >= 0 && !st.la(lab.name).empty()) seen[lab.centre] = 1;
            centres_alive = int(seen.size());
        }
        auto reroute_antihat = [&]() {
            ExtState sub = st;
            sub.ann.kind = JoinAnnotation::Kind::Antihat;
            auto y_labels = labels_inside(sub.ann, sub.ann.y2);
            auto z_labels = labels_inside(sub.ann, sub.z2a());
            auto x_labels = labels_inside(sub.ann, sub.ann.x2);
            for (int side = 0; side < 2; ++side) {
                bool x_side = side == 0;
                while (true) {
                    Bitset only = sub.side_only_colors(x_side);
                    if (only.empty()) break;
                    auto pair = x_side ? choose_stable_pair(sub, y_labels, z_labels)
                                       : choose_stable_pair(sub, x_labels, z_labels);
                    if (!pair) break;
                    sub.strip_class(only.first(), {pair->first, pair->second});
                }
            }
            if (!sub.v2a().empty()) {
                ExtState attempt = sub;
                auto classes = strip_color_classes(attempt, opts);
                if (sdr_complete(attempt, classes)) {
                    sub.adopt(attempt);
                } else {
                    canonical_terminal(sub, {{sub.x2a(), sub.y2a()}},
                                       [&](const ReducedView& view) {
                                           auto [x_out, x_join] =
                                               view.split(sub.ann.x2, sub.ann.y2);
                                           auto [y_out, y_join] =
                                               view.split(sub.ann.y2, sub.ann.x2);
                                           return std::vector<Bitset>{
                                               x_out, x_join, view.map(sub.z2a()), y_join,
                                               y_out};
                                       });
                }
            }
            st.color = sub.color;
            return st.finish();
        };
        if (centres_alive <= 2) return reroute_antihat();

        int before = residual_gamma_gj(st);
        std::vector<std::vector<int>> candidates;
        // diad in I(e1) x I(e2), join-preferring
        if (auto diad = choose_stable_pair(st, {"e1"}, {"e2"}))
            candidates.push_back({diad->first, diad->second});
        // J-matchings over three distinct centres in distinct columns
        {
            std::vector<PseudoLabel> centre_labels;
            for (auto& lab : plabels)
                if (lab.centre >= 0 && !st.la(lab.name).empty()) centre_labels.push_back(lab);
            for (size_t i = 0; i < centre_labels.size(); ++i)
                for (size_t jj = 0; jj < centre_labels.size(); ++jj)
                    for (size_t k2 = 0; k2 < centre_labels.size(); ++k2) {
                        if (i == jj || i == k2 || jj == k2) continue;
                        const auto &A = centre_labels[i], &B = centre_labels[jj],
                                   &C = centre_labels[k2];
                        if (A.centre == B.centre || A.centre == C.centre ||
                            B.centre == C.centre)
                            continue;
                        if (A.column != 0 || B.column != 1 || C.column != 2) continue;
                        candidates.push_back({st.la(A.name).first(), st.la(B.name).first(),
                                              st.la(C.name).first()});
                    }
        }
        bool advanced = false;
        for (auto& s2 : candidates) {
            ExtState probe = st;
            probe.strip_class(cl, s2);
            if (probe.v2a().empty() || residual_gamma_gj(probe) <= before - 1) {
                st.adopt(probe);
                advanced = true;
                break;
            }
        }
        if (!advanced) return reroute_antihat();
    }
}

} // namespace

// ------------------------------------------------------------- public fronts

namespace {

int threshold_for(const Graph& g, const JoinAnnotation& j) {
    JoinContext ctx = compute_join_context(g, j);
    return j.kind == JoinAnnotation::Kind::PseudoLine ? ctx.gamma_gj : ctx.gamma_lj;
}

void check_l(const Graph& g, const JoinAnnotation& j, int l) {
    int thr = threshold_for(g, j);
    if (l < thr)
        throw contract_error("extension: l=" + std::to_string(l) +
                             " below the join threshold " + std::to_string(thr));
}

template <typename F> Coloring with_retry(F&& run) {
    try {
        return run(false);
    } catch (const coloring_failure&) {
        return run(true);
    }
}

} // namespace

Coloring extend_canonical_interval(const Graph& g, const JoinAnnotation& j, const Coloring& c1,
                                   int l) {
    if (j.kind != JoinAnnotation::Kind::CanonicalInterval)
        throw contract_error("extend_canonical_interval: wrong join kind");
    j.validate(g);
    check_l(g, j, l);
    return do_extend_canonical(g, j, c1, l);
}

Coloring extend_antihat(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts) {
    if (j.kind != JoinAnnotation::Kind::Antihat)
        throw contract_error("extend_antihat: wrong join kind");
    j.validate(g);
    check_l(g, j, l);
    return with_retry([&](bool norm) { return do_extend_antihat(g, j, c1, l, opts, norm); });
}

Coloring extend_strange(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts) {
    if (j.kind != JoinAnnotation::Kind::Strange)
        throw contract_error("extend_strange: wrong join kind");
    j.validate(g);
    check_l(g, j, l);
    return with_retry([&](bool norm) { return do_extend_strange(g, j, c1, l, opts, norm); });
}

Coloring extend_gear(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                     const ColorOptions& opts) {
    if (j.kind != JoinAnnotation::Kind::Gear)
        throw contract_error("extend_gear: wrong join kind");
    j.validate(g);
    check_l(g, j, l);
    return with_retry([&](bool norm) { return do_extend_gear(g, j, c1, l, opts, norm); });
}

Coloring extend_pseudo_line(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                            const ColorOptions& opts) {
    if (j.kind != JoinAnnotation::Kind::PseudoLine)
        throw contract_error("extend_pseudo_line: wrong join kind");
    j.validate(g);
    check_l(g, j, l);
    return with_retry(
        [&](bool norm) { return do_extend_pseudo_line(g, j, c1, l, opts, norm); });
}

Coloring extend_join(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                     const ColorOptions& opts) {
    switch (j.kind) {
    case JoinAnnotation::Kind::CanonicalInterval:
        return extend_canonical_interval(g, j, c1, l);
    case JoinAnnotation::Kind::Antihat: return extend_antihat(g, j, c1, l, opts);
    case JoinAnnotation::Kind::Strange: return extend_strange(g, j, c1, l, opts);
    case JoinAnnotation::Kind::Gear: return extend_gear(g, j, c1, l, opts);
    case JoinAnnotation::Kind::PseudoLine: return extend_pseudo_line(g, j, c1, l, opts);
    }
    throw contract_error("extend_join: unknown kind");
}

} // namespace claw::colorers
