#include "claw/generators.hpp"
#include "claw/detect.hpp"
#include "claw/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace claw::gen {

namespace {
constexpr int kRetries = 64;
}

// ---------------------------------------------------------------- line graphs

Graph line_graph(const Multigraph& h, std::vector<std::pair<int, int>>* vertex_to_edge) {
    int m = int(h.edges.size());
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = h.edges[i];
            auto [c, d] = h.edges[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    if (vertex_to_edge) *vertex_to_edge = h.edges;
    return g;
}

Multigraph random_multigraph(Rng& rng, int n, int m) {
    if (n < 2) throw contract_error("random_multigraph: need n >= 2");
    Multigraph h;
    h.n = n;
    for (int i = 0; i < m; ++i) {
        int u = rng.below(n);
        int v = rng.below(n - 1);
        if (v >= u) ++v;
        h.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return h;
}

Instance gen_line_graph(uint64_t seed, int base_n, int base_m) {
    Rng rng(seed);
    Multigraph h = random_multigraph(rng, base_n, base_m);
    Instance inst;
    inst.g = line_graph(h);
    return inst;
}

// ------------------------------------------------------------------ intervals

Instance gen_interval(uint64_t seed, int n, IntervalRepresentation::Kind kind,
                      bool force_long) {
    if (n < 1) throw contract_error("gen_interval: need n >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        IntervalRepresentation rep;
        rep.kind = kind;
        rep.order.resize(n);
        std::iota(rep.order.begin(), rep.order.end(), 0);
        std::shuffle(rep.order.begin(), rep.order.end(), rng.eng);
        int count = 1 + rng.below(std::max(1, n));
        for (int i = 0; i < count && n > 1; ++i) {
            if (kind == IntervalRepresentation::Kind::Linear) {
                int a = rng.below(n);
                int b = std::min(n - 1, a + 1 + rng.below(4));
                rep.intervals.emplace_back(a, b);
            } else {
                int cap = force_long ? std::max(1, (n - 1) / 3 - 1) : std::max(1, n / 2);
                int a = rng.below(n);
                int len = 1 + rng.below(cap);
                rep.intervals.emplace_back(a, (a + len) % n);
            }
        }
        if (kind == IntervalRepresentation::Kind::Circular && force_long && !rep.is_long())
            continue;
        Instance inst;
        inst.g = rep.realize();
        inst.ann.interval = rep;
        return inst;
    }
    throw generation_error("gen_interval: no long representation found");
}

// ----------------------------------------------------------------- thickening

namespace {

/// Random nonempty proper removal pattern over an mu x mv join.
std::vector<std::pair<int, int>> random_pattern(Rng& rng, int mu, int mv) {
    int pairs = mu * mv;
    std::vector<std::pair<int, int>> removed;
    for (int i = 0; i < mu; ++i)
        for (int j = 0; j < mv; ++j)
            if (rng.chance(0.5)) removed.emplace_back(i, j);
    if (removed.empty()) removed.emplace_back(rng.below(mu), rng.below(mv));
    if (int(removed.size()) == pairs) removed.erase(removed.begin() + rng.below(pairs));
    return removed;
}

} // namespace

std::pair<ThickeningSpec, Graph> gen_thickening(uint64_t seed, const Graph& base,
                                                ThickeningSpec::Family family, int max_mult,
                                                double fuzz_prob) {
    if (detect::find_claw(base))
        throw contract_error("gen_thickening: base graph has a claw");
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        ThickeningSpec spec;
        spec.base = base;
        spec.family = family;
        spec.multiplicity.resize(base.n());
        for (int v = 0; v < base.n(); ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        std::vector<char> touched(base.n(), 0);
        auto edges = base.edges();
        std::shuffle(edges.begin(), edges.end(), rng.eng);
        for (auto [u, v] : edges) {
            if (touched[u] || touched[v]) continue;
            if (spec.multiplicity[u] * spec.multiplicity[v] < 2) continue;
            if (!rng.chance(fuzz_prob)) continue;
            touched[u] = touched[v] = 1;
            spec.fuzzy.push_back(
                {u, v, random_pattern(rng, spec.multiplicity[u], spec.multiplicity[v])});
        }
        Graph g = spec.realize();
        if (!detect::find_claw(g)) return {std::move(spec), std::move(g)};
    }
    throw generation_error("gen_thickening: no claw-free realization found");
}

// ---------------------------------------------------------------- icosahedral

Graph icosahedron_base(IcosahedralKind which) {
    Graph g0(12);
    auto ring = [](int i) { return (i - 1) % 10 + 1; };
    for (int i = 1; i <= 10; ++i) {
        g0.add_edge(i, ring(i % 10 + 1));
        g0.add_edge(i, ring((i + 1) % 10 + 1));
    }
    for (int i = 1; i <= 10; i += 2) g0.add_edge(0, i);
    for (int i = 2; i <= 10; i += 2) g0.add_edge(11, i);
    if (which == IcosahedralKind::G0) return g0;
    VertexSet keep = g0.all_vertices();
    keep.remove(11);
    if (which == IcosahedralKind::G1) return induced(g0, keep);
    keep.remove(10);
    return induced(g0, keep);
}

std::pair<ThickeningSpec, Graph> gen_icosahedral(uint64_t seed, IcosahedralKind which,
                                                 int max_mult) {
    Rng rng(seed);
    Graph base = icosahedron_base(which);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        ThickeningSpec spec;
        spec.base = base;
        spec.family = which == IcosahedralKind::G0   ? ThickeningSpec::Family::IcosahedralG0
                      : which == IcosahedralKind::G1 ? ThickeningSpec::Family::IcosahedralG1
                                                     : ThickeningSpec::Family::IcosahedralG2;
        spec.multiplicity.resize(base.n());
        for (int v = 0; v < base.n(); ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        if (which == IcosahedralKind::G2) {
            for (auto [u, v] : {std::pair{1, 4}, std::pair{6, 9}}) {
                if (!rng.chance(0.5)) continue;
                if (spec.multiplicity[u] * spec.multiplicity[v] < 2)
                    spec.multiplicity[u] = 2;
                spec.base.add_edge(u, v);
                spec.fuzzy.push_back(
                    {u, v, random_pattern(rng, spec.multiplicity[u], spec.multiplicity[v])});
            }
        }
        Graph g = spec.realize();
        if (!detect::find_claw(g)) return {std::move(spec), std::move(g)};
    }
    throw generation_error("gen_icosahedral: no claw-free realization found");
}

// -------------------------------------------------------------------- antihat

Graph antihat_graph(int k) {
    int n = 3 * k + 2;
    Graph g(n);
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return k + 1 + i; };
    auto c = [&](int i) { return 2 * k + 1 + i; };
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            g.add_edge(a(i), a(j));
            g.add_edge(b(i), b(j));
        }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_edge(c(i), c(j));
    for (int i = 1; i <= k; ++i) g.add_edge(a(i), b(i));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j) {
                g.add_edge(a(i), c(j));
                g.add_edge(b(i), c(j));
            }
    return g;
}

namespace {

/// antihat_graph plus the index maps the samplers use.
Graph antihat_base(int k, std::vector<int>& a, std::vector<int>& b, std::vector<int>& c) {
    a.resize(k + 1);
    b.resize(k + 1);
    c.assign(k + 1, -1);
    for (int i = 0; i <= k; ++i) a[i] = i;
    for (int i = 0; i <= k; ++i) b[i] = k + 1 + i;
    for (int i = 1; i <= k; ++i) c[i] = 2 * k + 1 + i;
    return antihat_graph(k);
}

} // namespace

AntihatInstance gen_antihat(uint64_t seed, const AntihatParams& params) {
    int k = params.k;
    if (k < 2) throw contract_error("gen_antihat: need k >= 2");
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<int> a, b, c;
        Graph h = antihat_base(k, a, b, c);

        // X avoids a0, b0 and keeps at least two C vertices
        std::vector<char> removed(h.n(), 0);
        std::vector<int> cs;
        for (int i = 1; i <= k; ++i) {
            if (rng.chance(params.remove_prob)) removed[a[i]] = 1;
            if (rng.chance(params.remove_prob)) removed[b[i]] = 1;
            if (rng.chance(params.remove_prob)) removed[c[i]] = 1;
        }
        for (int i = 1; i <= k; ++i)
            if (!removed[c[i]]) cs.push_back(i);
        while (int(cs.size()) < 2) {
            int i = 1 + rng.below(k);
            if (removed[c[i]]) {
                removed[c[i]] = 0;
                cs.push_back(i);
            }
        }

        // base = (H - X) u M; fuzzy = M
        VertexSet keep(h.n());
        for (int v = 0; v < h.n(); ++v)
            if (!removed[v]) keep.add(v);
        std::vector<int> old_to_new;
        Graph base = induced(h, keep, &old_to_new);

        AntihatInstance inst;
        inst.a.assign(k + 1, -1);
        inst.b.assign(k + 1, -1);
        inst.c.assign(k + 1, -1);
        for (int i = 0; i <= k; ++i) {
            if (!removed[a[i]]) inst.a[i] = old_to_new[a[i]];
            if (!removed[b[i]]) inst.b[i] = old_to_new[b[i]];
            if (i >= 1 && !removed[c[i]]) inst.c[i] = old_to_new[c[i]];
        }

        ThickeningSpec spec;
        spec.family = ThickeningSpec::Family::Antihat;
        spec.multiplicity.assign(base.n(), 1);
        for (int v = 0; v < base.n(); ++v) spec.multiplicity[v] = 1 + rng.below(params.max_mult);

        auto add_fuzzy = [&](int u, int v) {
            if (spec.multiplicity[u] * spec.multiplicity[v] < 2) spec.multiplicity[u] = 2;
            base.add_edge(u, v);
            spec.fuzzy.push_back(
                {u, v, random_pattern(rng, spec.multiplicity[u], spec.multiplicity[v])});
        };
        std::vector<char> matched(base.n(), 0);
        auto try_fuzzy = [&](int u, int v) {
            if (u < 0 || v < 0 || matched[u] || matched[v]) return;
            if (!rng.chance(params.fuzz_prob)) return;
            matched[u] = matched[v] = 1;
            add_fuzzy(u, v);
        };
        // a0 b0: either absent, or a fuzzy matching pair (when the base edge
        // exists it must be in M, so fuzzy either way)
        int a0 = inst.a[0], b0 = inst.b[0];
        int mode = params.a0b0_mode >= 0 ? params.a0b0_mode : (rng.below(3) != 0 ? 1 : 0);
        if (mode == 1) {
            matched[a0] = matched[b0] = 1;
            add_fuzzy(a0, b0);
        }
        for (int i = 1; i <= k; ++i) {
            if (inst.c[i] < 0) try_fuzzy(inst.a[i], inst.b[i]); // c_i in X
            if (inst.a[i] < 0) try_fuzzy(inst.b[i], inst.c[i]); // a_i in X
            if (inst.b[i] < 0) try_fuzzy(inst.a[i], inst.c[i]); // b_i in X
        }

        spec.base = base;
        std::vector<int> to_base;
        Graph g = spec.realize(&to_base);
        if (detect::find_claw(g)) continue;

        auto starts = spec.class_starts();
        auto class_set = [&](int v) {
            VertexSet s(g.n());
            for (int i = 0; i < spec.multiplicity[v]; ++i) s.add(starts[v] + i);
            return s;
        };
        inst.cliques.a = VertexSet(g.n());
        inst.cliques.b = VertexSet(g.n());
        inst.cliques.c = VertexSet(g.n());
        for (int i = 0; i <= k; ++i) {
            if (inst.a[i] >= 0) inst.cliques.a |= class_set(inst.a[i]);
            if (inst.b[i] >= 0) inst.cliques.b |= class_set(inst.b[i]);
            if (i >= 1 && inst.c[i] >= 0) inst.cliques.c |= class_set(inst.c[i]);
        }
        inst.spec = std::move(spec);
        inst.g = std::move(g);
        return inst;
    }
    throw generation_error("gen_antihat: no claw-free realization found");
}

// ------------------------------------------------------------------ hex joins

std::pair<Graph, ThreeCliques> hex_join(const Graph& g1, const ThreeCliques& t1,
                                        const Graph& g2, const ThreeCliques& t2) {
    int n1 = g1.n(), n = n1 + g2.n();
    Graph g(n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    auto shift = [&](const VertexSet& s) {
        VertexSet out(n);
        CLAW_FOR_SET(v, s) out.add(v + n1);
        return out;
    };
    auto lift = [&](const VertexSet& s) {
        VertexSet out(n);
        CLAW_FOR_SET(v, s) out.add(v);
        return out;
    };
    VertexSet a1 = lift(t1.a), b1 = lift(t1.b), c1 = lift(t1.c);
    VertexSet a2 = shift(t2.a), b2 = shift(t2.b), c2 = shift(t2.c);
    auto join = [&](const VertexSet& x, const VertexSet& y) {
        CLAW_FOR_SET(u, x) CLAW_FOR_SET(v, y) g.add_edge(u, v);
    };
    join(a1, a2);
    join(a2, b1);
    join(b1, b2);
    join(b2, c1);
    join(c1, c2);
    join(c2, a1);
    return {std::move(g), ThreeCliques{a1 | a2, b1 | b2, c1 | c2}};
}

std::pair<Graph, ThreeCliques> gen_three_cliqued_term(Rng& rng, int max_base) {
    int which = rng.below(3);
    if (which == 0) {
        // fuzzy blow-up of a triangle
        Graph k3(3);
        k3.add_edge(0, 1);
        k3.add_edge(0, 2);
        k3.add_edge(1, 2);
        auto [spec, g] = gen_thickening(rng.raw(), k3, ThickeningSpec::Family::Generic,
                                        std::max(1, max_base / 3), 0.5);
        auto starts = spec.class_starts();
        ThreeCliques t{VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n())};
        for (int i = 0; i < spec.multiplicity[0]; ++i) t.a.add(starts[0] + i);
        for (int i = 0; i < spec.multiplicity[1]; ++i) t.b.add(starts[1] + i);
        for (int i = 0; i < spec.multiplicity[2]; ++i) t.c.add(starts[2] + i);
        return {std::move(g), std::move(t)};
    }
    if (which == 1) {
        AntihatParams p;
        p.k = 2;
        p.max_mult = std::max(1, max_base / 8);
        AntihatInstance inst = gen_antihat(rng.raw(), p);
        return {std::move(inst.g), std::move(inst.cliques)};
    }
    // three-cliqued circular interval graph: three consecutive clique arcs
    // plus short extra arcs
    int per = 1 + rng.below(std::max(1, max_base / 3));
    int n = 3 * per;
    IntervalRepresentation rep;
    rep.kind = IntervalRepresentation::Kind::Circular;
    rep.order.resize(n);
    std::iota(rep.order.begin(), rep.order.end(), 0);
    for (int t = 0; t < 3; ++t)
        if (per > 1) rep.intervals.emplace_back(t * per, t * per + per - 1);
    int extra = rng.below(3);
    for (int i = 0; i < extra; ++i) {
        int start = rng.below(n);
        rep.intervals.emplace_back(start, (start + 1 + rng.below(std::max(1, per))) % n);
    }
    Graph g = rep.realize();
    ThreeCliques t{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < per; ++v) t.a.add(v);
    for (int v = per; v < 2 * per; ++v) t.b.add(v);
    for (int v = 2 * per; v < n; ++v) t.c.add(v);
    return {std::move(g), std::move(t)};
}

Instance gen_hex_join(uint64_t seed, int terms) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        auto [g, t] = gen_three_cliqued_term(rng, 9);
        for (int i = 1; i < terms; ++i) {
            if (rng.chance(0.15)) continue; // empty second term stays legal
            auto [g2, t2] = gen_three_cliqued_term(rng, 6);
            std::tie(g, t) = hex_join(g, t, g2, t2);
        }
        if (detect::find_claw(g)) continue;
        Instance inst;
        inst.g = std::move(g);
        inst.ann.three_cliques = std::move(t);
        return inst;
    }
    throw generation_error("gen_hex_join: no claw-free composite found");
}

// ---------------------------------------------------------------------- W5

bool contains_w5(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v).to_vector();
        int d = int(nb.size());
        if (d < 5) continue;
        // induced C5 in the neighborhood
        std::vector<int> pick;
        std::function<bool(int)> grow = [&](int from) -> bool {
            if (pick.size() == 5) {
                // check the chosen 5 vertices induce C5: 2-regular connected
                for (int i = 0; i < 5; ++i) {
                    int deg = 0;
                    for (int j = 0; j < 5; ++j)
                        if (i != j && g.adjacent(pick[i], pick[j])) ++deg;
                    if (deg != 2) return false;
                }
                // 2-regular on 5 vertices is either C5 or disconnected; the
                // only disconnected option needs a cycle shorter than 3
                return true;
            }
            for (int i = from; i < d; ++i) {
                pick.push_back(nb[i]);
                if (grow(i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (grow(0)) return true;
    }
    return false;
}

Graph gear_base() {
    Graph h(10); // v1..v10 -> 0..9
    auto E = [&](int u, int v) { h.add_edge(u - 1, v - 1); };
    for (int i = 1; i <= 6; ++i) E(i, i % 6 + 1); // 6-hole
    E(7, 1); E(7, 2); E(7, 3); E(7, 6);
    E(8, 3); E(8, 4); E(8, 5); E(8, 6); E(8, 7);
    E(9, 3); E(9, 4); E(9, 6); E(9, 1); E(9, 7); E(9, 8);
    E(10, 2); E(10, 3); E(10, 5); E(10, 6); E(10, 7); E(10, 8);
    return h;
}

Graph strange_base() {
    Graph base(7);
    enum { A1, A2, B1, B2, B3, C1, C2 };
    base.add_edge(A1, A2);
    base.add_edge(B1, B2);
    base.add_edge(B1, B3);
    base.add_edge(B2, B3);
    base.add_edge(C1, C2);
    base.add_edge(A1, B1);
    base.add_edge(C1, A2);
    base.add_edge(C1, B2);
    base.add_edge(C1, B3);
    base.add_edge(C2, A1);
    base.add_edge(C2, A2);
    base.add_edge(C2, B1);
    base.add_edge(C2, B2);
    return base;
}

// ------------------------------------------------------------------- strips

namespace {

struct StripParts {
    Graph g; // local indices
    VertexSet x2, y2;
    std::map<std::string, VertexSet> labels;
    std::vector<int> order; // canonical-interval kind only
};

/// Linear interval host on n vertices (identity order), with clique windows
/// covering the X1 prefix and Y1 suffix.
std::pair<Graph, IntervalRepresentation> interval_host(Rng& rng, int n, int x1s, int y1s) {
    IntervalRepresentation rep;
    rep.kind = IntervalRepresentation::Kind::Linear;
    rep.order.resize(n);
    std::iota(rep.order.begin(), rep.order.end(), 0);
    if (x1s > 1) rep.intervals.emplace_back(0, x1s - 1);
    if (y1s > 1) rep.intervals.emplace_back(n - y1s, n - 1);
    int extra = 1 + rng.below(n);
    for (int i = 0; i < extra; ++i) {
        int a = rng.below(n);
        int b = std::min(n - 1, a + 1 + rng.below(3));
        rep.intervals.emplace_back(a, b);
    }
    return {rep.realize(), rep};
}

StripParts build_canonical_strip(Rng& rng, int x2s, int y2s, int extra, int /*max_mult*/) {
    int s = x2s + extra + y2s;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        IntervalRepresentation rep;
        rep.kind = IntervalRepresentation::Kind::Linear;
        rep.order.resize(s);
        std::iota(rep.order.begin(), rep.order.end(), 0);
        if (x2s > 1) rep.intervals.emplace_back(0, x2s - 1);
        if (y2s > 1) rep.intervals.emplace_back(s - y2s, s - 1);
        int count = 1 + rng.below(s);
        for (int i = 0; i < count; ++i) {
            int a = rng.below(s);
            int b = std::min(s - 1, a + 1 + rng.below(3));
            rep.intervals.emplace_back(a, b);
        }
        Graph g = rep.realize();
        if (g.is_clique(g.all_vertices())) continue; // the strip must not be a clique
        StripParts parts;
        parts.g = std::move(g);
        parts.x2 = VertexSet(s);
        parts.y2 = VertexSet(s);
        for (int i = 0; i < x2s; ++i) parts.x2.add(i);
        for (int i = 0; i < y2s; ++i) parts.y2.add(s - 1 - i);
        VertexSet all(s);
        all.fill();
        parts.labels["interval-strip"] = all;
        parts.order.resize(s);
        std::iota(parts.order.begin(), parts.order.end(), 0);
        return parts;
    }
    throw generation_error("build_canonical_strip: could not avoid a clique strip");
}

/// Realized class of a base vertex, as a set of strip vertex ids.
VertexSet spec_class(const ThickeningSpec& spec, const std::vector<int>& starts, int v, int n) {
    VertexSet s(n);
    if (v >= 0)
        for (int i = 0; i < spec.multiplicity[v]; ++i) s.add(starts[v] + i);
    return s;
}

StripParts build_antihat_strip(Rng& rng, int k, int max_mult) {
    // bias toward the fuzzy a_i b_i pattern that makes a W5 appear
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<int> a, b, c;
        Graph h = antihat_base(k, a, b, c);
        std::vector<char> removed(h.n(), 0);
        removed[a[0]] = removed[b[0]] = 1; // the strip drops a0 and b0
        removed[c[1]] = 1;                 // c_1 in X enables fuzz on a1 b1
        for (int i = 2; i <= k; ++i)
            if (rng.chance(0.2) && i >= 3) removed[c[i]] = 1;
        int c_left = 0;
        for (int i = 1; i <= k; ++i) c_left += !removed[c[i]];
        if (c_left < 2) continue;

        VertexSet keep(h.n());
        for (int v = 0; v < h.n(); ++v)
            if (!removed[v]) keep.add(v);
        std::vector<int> old_to_new;
        Graph base = induced(h, keep, &old_to_new);

        ThickeningSpec spec;
        spec.family = ThickeningSpec::Family::StripInternal;
        spec.multiplicity.assign(base.n(), 1);
        for (int v = 0; v < base.n(); ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        int a1 = old_to_new[a[1]], b1 = old_to_new[b[1]];
        if (spec.multiplicity[a1] < 2) spec.multiplicity[a1] = 2; // W5 needs two a1 copies
        spec.fuzzy.push_back(
            {std::min(a1, b1), std::max(a1, b1),
             random_pattern(rng, spec.multiplicity[std::min(a1, b1)],
                            spec.multiplicity[std::max(a1, b1)])});
        spec.base = base;
        Graph g = spec.realize();
        if (detect::find_claw(g) || !contains_w5(g)) continue;

        auto starts = spec.class_starts();
        StripParts parts;
        parts.x2 = VertexSet(g.n());
        parts.y2 = VertexSet(g.n());
        for (int i = 1; i <= k; ++i) {
            int av = removed[a[i]] ? -1 : old_to_new[a[i]];
            int bv = removed[b[i]] ? -1 : old_to_new[b[i]];
            int cv = removed[c[i]] ? -1 : old_to_new[c[i]];
            if (av >= 0) {
                parts.labels["a" + std::to_string(i)] = spec_class(spec, starts, av, g.n());
                parts.x2 |= parts.labels["a" + std::to_string(i)];
            }
            if (bv >= 0) {
                parts.labels["b" + std::to_string(i)] = spec_class(spec, starts, bv, g.n());
                parts.y2 |= parts.labels["b" + std::to_string(i)];
            }
            if (cv >= 0) parts.labels["c" + std::to_string(i)] = spec_class(spec, starts, cv, g.n());
        }
        if (parts.x2.empty() || parts.y2.empty()) continue;
        parts.g = std::move(g);
        return parts;
    }
    throw generation_error("build_antihat_strip: no W5 realization found");
}

StripParts build_strange_strip(Rng& rng, int max_mult) {
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Graph base = strange_base();
        enum { A1, A2, B1, B2, B3, C1, C2 };

        ThickeningSpec spec;
        spec.family = ThickeningSpec::Family::StripInternal;
        spec.base = base;
        spec.multiplicity.assign(7, 1);
        for (int v = 0; v < 7; ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        if (spec.multiplicity[B3] * spec.multiplicity[C1] < 2) spec.multiplicity[B3] = 2;
        if (spec.multiplicity[B2] * spec.multiplicity[C2] < 2) spec.multiplicity[B2] = 2;
        spec.fuzzy.push_back(
            {B3, C1, random_pattern(rng, spec.multiplicity[B3], spec.multiplicity[C1])});
        spec.fuzzy.push_back(
            {B2, C2, random_pattern(rng, spec.multiplicity[B2], spec.multiplicity[C2])});

        Graph g = spec.realize();
        if (detect::find_claw(g)) continue;
        auto starts = spec.class_starts();
        StripParts parts;
        const char* names[7] = {"a1", "a2", "b1", "b2", "b3", "c1", "c2"};
        for (int v = 0; v < 7; ++v)
            parts.labels[names[v]] = spec_class(spec, starts, v, g.n());
        parts.x2 = parts.labels["a1"] | parts.labels["a2"];
        parts.y2 = parts.labels["b1"] | parts.labels["b2"] | parts.labels["b3"];
        parts.g = std::move(g);
        return parts;
    }
    throw generation_error("build_strange_strip: no claw-free realization found");
}

StripParts build_gear_strip(Rng& rng, int max_mult) {
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Graph h = gear_base();

        std::vector<char> removed(10, 0);
        if (rng.chance(0.5)) removed[8] = 1; // v9
        if (rng.chance(0.5)) removed[9] = 1; // v10
        VertexSet keep(10);
        for (int v = 0; v < 10; ++v)
            if (!removed[v]) keep.add(v);
        std::vector<int> old_to_new;
        Graph base = induced(h, keep, &old_to_new);

        ThickeningSpec spec;
        spec.family = ThickeningSpec::Family::StripInternal;
        spec.multiplicity.assign(base.n(), 1);
        for (int v = 0; v < base.n(); ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        if (rng.chance(0.5)) {
            int v7 = old_to_new[6], v8 = old_to_new[7];
            if (spec.multiplicity[v7] * spec.multiplicity[v8] < 2) spec.multiplicity[v7] = 2;
            spec.fuzzy.push_back(
                {v7, v8, random_pattern(rng, spec.multiplicity[v7], spec.multiplicity[v8])});
        }
        spec.base = base;
        Graph g = spec.realize();
        if (detect::find_claw(g)) continue;
        auto starts = spec.class_starts();
        StripParts parts;
        for (int v = 0; v < 10; ++v) {
            if (removed[v]) continue;
            parts.labels["v" + std::to_string(v + 1)] =
                spec_class(spec, starts, old_to_new[v], g.n());
        }
        parts.x2 = parts.labels["v1"] | parts.labels["v2"];
        parts.y2 = parts.labels["v4"] | parts.labels["v5"];
        parts.g = std::move(g);
        return parts;
    }
    throw generation_error("build_gear_strip: no claw-free realization found");
}

StripParts build_pseudo_line_strip(Rng& rng, int max_mult) {
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        // J: path j1 j2 j3 plus centres; centre 0 sees all three (W5 anchor),
        // centre 1 sees j2 only, extras random
        int centres = 2 + rng.below(2);
        std::vector<std::array<bool, 3>> sees(centres, {false, false, false});
        sees[0] = {true, true, true};
        sees[1] = {false, true, false};
        for (int t = 2; t < centres; ++t) {
            sees[t] = {rng.chance(0.5), rng.chance(0.5), rng.chance(0.5)};
            if (!sees[t][0] && !sees[t][1] && !sees[t][2]) sees[t][1] = true;
        }
        // line-graph vertices: e1, e2, then centre edges
        struct JEdge {
            int ja, jb; // -1 for centre end; ja in {0,1,2} marks j1/j2/j3
            int centre;
        };
        std::vector<JEdge> jedges;
        jedges.push_back({0, 1, -1}); // e1 = j1 j2
        jedges.push_back({1, 2, -1}); // e2 = j2 j3
        std::vector<std::string> names = {"e1", "e2"};
        for (int t = 0; t < centres; ++t)
            for (int j = 0; j < 3; ++j)
                if (sees[t][j]) {
                    jedges.push_back({j, -1, t});
                    names.push_back("t" + std::to_string(t) + "_j" + std::to_string(j + 1));
                }
        int nb = int(jedges.size());
        Graph base(nb);
        auto shares = [&](const JEdge& x, const JEdge& y) {
            bool sj = (x.ja >= 0 && (x.ja == y.ja || x.ja == y.jb)) ||
                      (x.jb >= 0 && (x.jb == y.ja || x.jb == y.jb));
            bool sc = x.centre >= 0 && x.centre == y.centre;
            return sj || sc;
        };
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                if (shares(jedges[i], jedges[j])) base.add_edge(i, j);

        ThickeningSpec spec;
        spec.family = ThickeningSpec::Family::StripInternal;
        spec.base = base;
        spec.multiplicity.assign(nb, 1);
        for (int v = 0; v < nb; ++v) spec.multiplicity[v] = 1 + rng.below(max_mult);
        if (spec.multiplicity[0] * spec.multiplicity[1] < 2) spec.multiplicity[0] = 2;
        spec.fuzzy.push_back({0, 1, random_pattern(rng, spec.multiplicity[0], spec.multiplicity[1])});

        Graph g = spec.realize();
        if (detect::find_claw(g) || !contains_w5(g)) continue;
        auto starts = spec.class_starts();
        StripParts parts;
        parts.x2 = VertexSet(g.n());
        parts.y2 = VertexSet(g.n());
        for (int v = 0; v < nb; ++v) {
            VertexSet cls = spec_class(spec, starts, v, g.n());
            parts.labels[names[v]] = cls;
            bool at_j1 = jedges[v].ja == 0 || jedges[v].jb == 0;
            bool at_j3 = jedges[v].ja == 2 || jedges[v].jb == 2;
            if (at_j1) parts.x2 |= cls;
            if (at_j3) parts.y2 |= cls;
        }
        parts.g = std::move(g);
        return parts;
    }
    throw generation_error("build_pseudo_line_strip: no W5 realization found");
}

} // namespace

Instance gen_strip_composite(uint64_t seed, JoinAnnotation::Kind kind,
                             const StripCompositeParams& params) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        int hn = params.host_n;
        auto [host, host_rep] = interval_host(rng, hn, params.x1_size, params.y1_size);

        StripParts strip;
        switch (kind) {
        case JoinAnnotation::Kind::CanonicalInterval:
            strip = build_canonical_strip(rng, 1 + rng.below(2), 1 + rng.below(2),
                                          std::max(1, params.strip_extra), params.max_mult);
            break;
        case JoinAnnotation::Kind::Antihat:
            strip = build_antihat_strip(rng, 3, params.max_mult);
            break;
        case JoinAnnotation::Kind::Strange:
            strip = build_strange_strip(rng, params.max_mult);
            break;
        case JoinAnnotation::Kind::PseudoLine:
            strip = build_pseudo_line_strip(rng, params.max_mult);
            break;
        case JoinAnnotation::Kind::Gear:
            strip = build_gear_strip(rng, params.max_mult);
            break;
        }

        int sn = strip.g.n();
        int n = hn + sn;
        Graph g(n);
        for (auto [u, v] : host.edges()) g.add_edge(u, v);
        for (auto [u, v] : strip.g.edges()) g.add_edge(u + hn, v + hn);

        JoinAnnotation ann;
        ann.kind = kind;
        ann.x1 = VertexSet(n);
        ann.y1 = VertexSet(n);
        for (int i = 0; i < params.x1_size; ++i) ann.x1.add(i);
        for (int i = 0; i < params.y1_size; ++i) ann.y1.add(hn - 1 - i);
        auto shift = [&](const VertexSet& s) {
            VertexSet out(n);
            CLAW_FOR_SET(v, s) out.add(v + hn);
            return out;
        };
        ann.x2 = shift(strip.x2);
        ann.y2 = shift(strip.y2);
        for (auto& [name, set] : strip.labels) ann.strip_labels[name] = shift(set);
        for (int p : strip.order) ann.strip_order.push_back(p + hn);

        CLAW_FOR_SET(u, ann.x1) CLAW_FOR_SET(v, ann.x2) g.add_edge(u, v);
        CLAW_FOR_SET(u, ann.y1) CLAW_FOR_SET(v, ann.y2) g.add_edge(u, v);

        if (detect::find_claw(g)) continue;
        try {
            ann.validate(g);
        } catch (const contract_error&) {
            continue;
        }
        if (params.host_within_threshold) {
            JoinContext ctx = compute_join_context(g, ann);
            int threshold =
                kind == JoinAnnotation::Kind::PseudoLine ? ctx.gamma_gj : ctx.gamma_lj;
            Graph g1 = induced(g, ann.v1(n));
            if (oracle::chromatic_number(g1) > threshold) continue;
        }
        Instance inst;
        inst.g = std::move(g);
        inst.ann.join = std::move(ann);
        return inst;
    }
    throw generation_error("gen_strip_composite: rejection budget exhausted");
}

} // namespace claw::gen
