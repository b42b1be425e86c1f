#include "claw/struct_color.hpp"

#include "claw/detect.hpp"
#include "claw/generators.hpp"
#include "claw/oracle.hpp"
#include "claw/reduce.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

namespace claw::colorers {

namespace {

/// Renumber a coloring to consecutive color ids starting at 0.
Coloring compact_colors(const Coloring& c) {
    std::map<int, int> remap;
    Coloring out;
    out.color.reserve(c.color.size());
    for (int col : c.color) {
        auto it = remap.find(col);
        if (it == remap.end()) it = remap.emplace(col, int(remap.size())).first;
        out.color.push_back(it->second);
    }
    return out;
}

std::optional<Coloring> peel_rec(const Graph& g, int& budget) {
    if (g.n() == 0) return Coloring{};
    if (budget-- <= 0) return std::nullopt;
    auto [gw, trace] = reduce::make_skeletal(g);
    std::optional<Coloring> base;
    if (!detect::find_triad(gw)) {
        base = color_alpha2(gw);
    } else {
        auto cert = detect::find_good_triad(gw);
        if (!cert) return std::nullopt;
        VertexSet keep = gw.all_vertices();
        for (int t : cert->triad) keep.remove(t);
        std::vector<int> back;
        Graph rest = induced(gw, keep, nullptr, &back);
        auto sub = peel_rec(rest, budget);
        if (!sub) return std::nullopt;
        Coloring full;
        full.color.assign(gw.n(), sub->k()); // the triad takes a fresh color
        for (int i = 0; i < rest.n(); ++i) full.color[back[i]] = sub->color[i];
        base = full;
    }
    return reduce::lift_through_trace(g, trace, *base);
}

} // namespace

std::optional<Coloring> peel_good_triads(const Graph& g, int budget) {
    int b = budget;
    auto c = peel_rec(g, b);
    if (c) *c = compact_colors(*c);
    return c;
}

namespace {

/// Two disjoint base triads whose union hits every base triangle while every
/// other base vertex keeps three neighbors in it: stripping one vertex per
/// involved class in two stable sets is then a sound batch (the same
/// accounting as the fuzzy-pair batch, without joins to respect).
std::optional<std::pair<std::array<int, 3>, std::array<int, 3>>>
find_batch_triad_pair(const Graph& base, const Bitset& alive) {
    std::vector<std::array<int, 3>> triads;
    auto av = alive.to_vector();
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = i + 1; j < av.size(); ++j) {
            if (base.adjacent(av[i], av[j])) continue;
            for (size_t k = j + 1; k < av.size(); ++k) {
                if (base.adjacent(av[i], av[k]) || base.adjacent(av[j], av[k])) continue;
                triads.push_back({av[i], av[j], av[k]});
            }
        }
    std::vector<std::array<int, 3>> triangles;
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = i + 1; j < av.size(); ++j) {
            if (!base.adjacent(av[i], av[j])) continue;
            for (size_t k = j + 1; k < av.size(); ++k)
                if (base.adjacent(av[i], av[k]) && base.adjacent(av[j], av[k]))
                    triangles.push_back({av[i], av[j], av[k]});
        }
    for (size_t i = 0; i < triads.size(); ++i)
        for (size_t j = i + 1; j < triads.size(); ++j) {
            Bitset x(base.n());
            for (int v : triads[i]) x.add(v);
            bool disjoint = true;
            for (int v : triads[j]) {
                if (x.contains(v)) disjoint = false;
                x.add(v);
            }
            if (!disjoint) continue;
            bool hits_all = true;
            for (const auto& t : triangles)
                if (!x.contains(t[0]) && !x.contains(t[1]) && !x.contains(t[2])) {
                    hits_all = false;
                    break;
                }
            if (!hits_all) continue;
            bool outsiders_ok = true;
            CLAW_FOR_SET(v, alive) {
                if (x.contains(v)) continue;
                if (base.neighbors(v).count_and(x) < 3) {
                    outsiders_ok = false;
                    break;
                }
            }
            if (outsiders_ok) return std::make_pair(triads[i], triads[j]);
        }
    return std::nullopt;
}

/// Exact coloring of a residue left over by the icosahedral batches via the
/// full pipeline (skeletal reduction, cutset split, peeling, capped oracle).
Coloring color_residue(const Graph& g, const ColorOptions& opts) {
    if (g.n() == 0) return Coloring{};
    return color_claw_free(g, {}, opts);
}

} // namespace

Coloring color_icosahedral(const ThickeningSpec& spec, const Graph& g,
                           const ColorOptions& opts) {
    using Family = ThickeningSpec::Family;
    if (spec.family != Family::IcosahedralG0 && spec.family != Family::IcosahedralG1 &&
        spec.family != Family::IcosahedralG2)
        throw contract_error("color_icosahedral: spec family is not icosahedral");
    std::vector<int> to_base;
    if (!(spec.realize(&to_base) == g))
        throw contract_error("color_icosahedral: graph does not realize the spec");

    // fuzzy pairs reduce to skeletal joins first (G2); G0/G1 are untouched
    auto [gw, trace] = reduce::make_skeletal(g);

    int nb = spec.base.n();
    Bitset alive = g.all_vertices();
    std::vector<int> color(g.n(), -1);
    int next = 0;

    auto class_alive = [&](int v) {
        Bitset s(g.n());
        CLAW_FOR_SET(x, alive) if (to_base[x] == v) s.add(x);
        return s;
    };
    auto alive_base = [&]() {
        Bitset s(nb);
        for (int v = 0; v < nb; ++v)
            if (!class_alive(v).empty()) s.add(v);
        return s;
    };
    auto strip_set = [&](const std::vector<int>& verts) {
        for (int x : verts) color[x] = next;
        for (int x : verts) alive.remove(x);
        ++next;
    };
    // join endpoints of the skeletal pair between two base classes
    auto omega_of = [&](int u, int v) {
        Bitset cu = class_alive(u), cv = class_alive(v);
        Bitset out(g.n());
        CLAW_FOR_SET(x, cu) if (gw.neighbors(x).intersects(cv)) out.add(x);
        CLAW_FOR_SET(x, cv) if (gw.neighbors(x).intersects(cu)) out.add(x);
        return out;
    };

    bool g2_family = spec.family == Family::IcosahedralG2;
    while (true) {
        Bitset ab = alive_base();
        if (ab.empty()) break;

        if (ab.count() >= 11) {
            // at most one class has emptied: the alive base is the
            // icosahedron or the icosahedron minus a vertex, and one vertex
            // from every class grouped by a proper 4-coloring of the alive
            // base is a sound batch
            Graph base_alive = induced(spec.base, ab);
            std::vector<int> ab_back = ab.to_vector();
            Coloring base4;
            oracle::chromatic_number(base_alive, &base4);
            std::vector<std::vector<int>> batch(base4.k());
            for (int i = 0; i < base_alive.n(); ++i)
                batch[base4.color[i]].push_back(class_alive(ab_back[i]).first());
            for (auto& set : batch)
                if (!set.empty()) strip_set(set);
            continue;
        }

        if (g2_family && ab.count() == nb) {
            // two stable sets: {v1, v4, v7} and {v3, v6, v9}, hitting the
            // skeletal joins of the fuzzy pairs when nonempty
            auto pick_pair = [&](int u, int v) -> std::optional<std::pair<int, int>> {
                Bitset om = omega_of(u, v);
                Bitset cu = class_alive(u), cv = class_alive(v);
                CLAW_FOR_SET(x, cu) {
                    Bitset non = cv - gw.neighbors(x);
                    if (non.empty()) continue;
                    if (om.empty() || om.contains(x)) return std::make_pair(x, non.first());
                    Bitset nom = non & om;
                    if (!nom.empty()) return std::make_pair(x, nom.first());
                }
                // fall back to any nonadjacent pair
                CLAW_FOR_SET(x, cu) {
                    Bitset non = cv - gw.neighbors(x);
                    if (!non.empty()) return std::make_pair(x, non.first());
                }
                return std::nullopt;
            };
            auto p14 = pick_pair(1, 4);
            auto p69 = pick_pair(6, 9);
            if (p14 && p69) {
                strip_set({p14->first, p14->second, class_alive(7).first()});
                strip_set({class_alive(3).first(), p69->first, p69->second});
                continue;
            }
            // a fuzzy pair became a clique: fall through
        }

        // degenerate pattern: when the alive base still supports two
        // triangle-covering triads (and no live join constrains the picks),
        // strip them as two stable sets; otherwise hand over to the residue
        bool fuzz_alive = false;
        for (const auto& f : spec.fuzzy)
            if (!class_alive(f.u).empty() && !class_alive(f.v).empty()) {
                // only joins with both sides alive and incomplete constrain us
                Bitset cu = class_alive(f.u), cv = class_alive(f.v);
                CLAW_FOR_SET(x, cu) {
                    if (!cv.subset_of(gw.neighbors(x))) {
                        fuzz_alive = true;
                        break;
                    }
                }
            }
        if (!fuzz_alive) {
            if (auto pair = find_batch_triad_pair(spec.base, ab)) {
                auto pick = [&](const std::array<int, 3>& t) {
                    std::vector<int> set;
                    for (int v : t) set.push_back(class_alive(v).first());
                    return set;
                };
                strip_set(pick(pair->first));
                strip_set(pick(pair->second));
                continue;
            }
        }
        break;
    }

    if (!alive.empty()) {
        std::vector<int> back;
        Graph res = induced(gw, alive, nullptr, &back);
        std::optional<Coloring> rc;
        // hub classes gone: the rest is a thickened arc of the distance-2
        // ring, a circular interval graph colored exactly from a block model
        bool hubs_gone = class_alive(0).empty() && (nb < 12 || class_alive(11).empty());
        if (hubs_gone) {
            IntervalRepresentation rep;
            rep.kind = IntervalRepresentation::Kind::Circular;
            std::vector<int> fwd(gw.n(), -1);
            for (int i = 0; i < res.n(); ++i) fwd[back[i]] = i;
            std::vector<int> block_start, block_end, ring_index;
            for (int i = 1; i <= 10 && i < nb; ++i) {
                Bitset cls = class_alive(i);
                if (cls.empty()) continue;
                block_start.push_back(int(rep.order.size()));
                CLAW_FOR_SET(x, cls) rep.order.push_back(fwd[x]);
                block_end.push_back(int(rep.order.size()) - 1);
                ring_index.push_back(i);
            }
            int blocks = int(ring_index.size());
            auto cyc = [&](int a, int b) {
                int d = std::abs(ring_index[a] - ring_index[b]);
                return std::min(d, 10 - d);
            };
            for (int a = 0; a < blocks; ++a) {
                rep.intervals.emplace_back(block_start[a], block_end[a]);
                for (int step = 1; step <= 2; ++step) {
                    int b2 = (a + step) % blocks;
                    if (b2 != a && cyc(a, b2) <= 2)
                        rep.intervals.emplace_back(block_start[a], block_end[b2]);
                }
            }
            if (rep.consistent_with(res)) rc = color_circular_interval(rep, res);
        }
        if (!rc) rc = color_residue(res, opts);
        for (int i = 0; i < res.n(); ++i) color[back[i]] = next + rc->color[i];
    }

    Coloring out;
    out.color = std::move(color);
    out = reduce::lift_through_trace(g, trace, out);
    if (!check_coloring(g, out)) throw coloring_failure("color_icosahedral: improper result");
    return compact_colors(out);
}

std::optional<std::pair<VertexSet, VertexSet>> find_clique_cutset(const Graph& g) {
    int n = g.n();
    if (n == 0) return std::nullopt;
    // components first: an empty cutset
    {
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = nc;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                CLAW_FOR_SET(v, g.neighbors(u)) if (comp[v] < 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
            ++nc;
        }
        if (nc > 1) {
            VertexSet side(n);
            for (int v = 0; v < n; ++v)
                if (comp[v] == 0) side.add(v);
            return std::make_pair(VertexSet(n), side);
        }
    }

    // MCS-M (Berry et al.): build a minimal triangulation; the higher
    // neighborhoods madj(v) are minimal separators of the filled graph, and
    // those that are cliques in g are clique cutsets. Every candidate is
    // verified before use.
    std::vector<int> weight(n, 0), order;
    std::vector<char> numbered(n, false);
    std::vector<Bitset> madj(n, Bitset(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        // u joins madj(best) iff some g-path best..u has every intermediate
        // unnumbered with weight below weight[u]; bottleneck shortest paths
        // over the unnumbered part decide it (dist = -1 for direct edges)
        constexpr int INF = 1 << 29;
        std::vector<int> dist(n, INF);
        std::vector<char> done(n, false);
        CLAW_FOR_SET(u, g.neighbors(best)) if (!numbered[u]) dist[u] = -1;
        while (true) {
            int x = -1;
            for (int u = 0; u < n; ++u)
                if (!numbered[u] && !done[u] && dist[u] < INF && (x < 0 || dist[u] < dist[x]))
                    x = u;
            if (x < 0) break;
            done[x] = true;
            int through = std::max(dist[x], weight[x]);
            CLAW_FOR_SET(u, g.neighbors(x)) {
                if (numbered[u] || u == best) continue;
                if (through < dist[u]) dist[u] = through;
            }
        }
        for (int u = 0; u < n; ++u)
            if (!numbered[u] && u != best && dist[u] < weight[u]) madj[best].add(u);
        CLAW_FOR_SET(u, madj[best]) ++weight[u];
        numbered[best] = true;
        order.push_back(best);
    }
    std::reverse(order.begin(), order.end()); // elimination order

    for (int v : order) {
        const Bitset& sep = madj[v];
        if (sep.empty() || sep.count() >= n - 1) continue;
        if (!g.is_clique(sep)) continue;
        // verify separation in g
        Bitset rest = g.all_vertices();
        rest -= sep;
        int s0 = rest.first();
        if (s0 < 0) continue;
        Bitset seen(n);
        seen.add(s0);
        std::vector<int> stack{s0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            Bitset nb = g.neighbors(u) & rest;
            CLAW_FOR_SET(x, nb) if (!seen.contains(x)) {
                seen.add(x);
                stack.push_back(x);
            }
        }
        if (seen.count() < rest.count()) return std::make_pair(sep, seen);
    }
    return std::nullopt;
}

namespace {

Coloring color_claw_free_impl(const Graph& g, const Annotation& ann, const ColorOptions& opts,
                              int depth);

/// Glue colorings across a verified clique cutset: color both closed sides,
/// then permute the second side's colors to agree on the cutset.
Coloring color_with_cutset(const Graph& g, const VertexSet& cut, const VertexSet& side,
                           const ColorOptions& opts, int depth) {
    VertexSet left = side | cut;
    VertexSet right = g.all_vertices() - side;
    std::vector<int> lback, rback;
    Graph gl = induced(g, left, nullptr, &lback);
    Graph gr = induced(g, right, nullptr, &rback);
    Coloring cl = color_claw_free_impl(gl, {}, opts, depth + 1);
    Coloring cr = color_claw_free_impl(gr, {}, opts, depth + 1);
    int k = std::max(cl.k(), cr.k());
    // cutset vertices have distinct colors on both sides; map right to left
    std::vector<int> perm(k, -1);
    std::vector<int> rpos(g.n(), -1);
    for (int i = 0; i < gr.n(); ++i) rpos[rback[i]] = i;
    for (int i = 0; i < gl.n(); ++i) {
        int v = lback[i];
        if (cut.contains(v)) perm[cr.color[rpos[v]]] = cl.color[i];
    }
    // remaining colors get the unused slots bijectively
    std::vector<char> used(k, false);
    for (int p : perm)
        if (p >= 0) used[p] = true;
    int slot = 0;
    for (int c = 0; c < k; ++c) {
        if (perm[c] >= 0) continue;
        while (slot < k && used[slot]) ++slot;
        perm[c] = slot;
        used[slot] = true;
    }
    Coloring out;
    out.color.assign(g.n(), -1);
    for (int i = 0; i < gl.n(); ++i) out.color[lback[i]] = cl.color[i];
    for (int i = 0; i < gr.n(); ++i) out.color[rback[i]] = perm[cr.color[i]];
    return out;
}

Coloring color_claw_free_impl(const Graph& g, const Annotation& ann, const ColorOptions& opts,
                              int depth) {
    if (g.n() == 0) return Coloring{};
    if (depth > 64) throw coloring_failure("color_claw_free: decomposition too deep");

    // structured paths from the annotation
    if (ann.join) {
        const JoinAnnotation& j = *ann.join;
        VertexSet v1 = j.v1(g.n());
        std::vector<int> back;
        Graph g1 = induced(g, v1, nullptr, &back);
        Coloring c1sub = color_claw_free_impl(g1, {}, opts, depth + 1);
        JoinContext ctx = compute_join_context(g, j);
        int threshold =
            j.kind == JoinAnnotation::Kind::PseudoLine ? ctx.gamma_gj : ctx.gamma_lj;
        int l = std::max(threshold, c1sub.k());
        Coloring c1;
        c1.color.assign(g.n(), -1);
        for (int i = 0; i < g1.n(); ++i) c1.color[back[i]] = c1sub.color[i];
        return compact_colors(extend_join(g, j, c1, l, opts));
    }
    if (ann.thickening) {
        auto fam = ann.thickening->family;
        if (fam == ThickeningSpec::Family::IcosahedralG0 ||
            fam == ThickeningSpec::Family::IcosahedralG1 ||
            fam == ThickeningSpec::Family::IcosahedralG2)
            return color_icosahedral(*ann.thickening, g, opts);
    }
    if (ann.interval) {
        if (ann.interval->kind == IntervalRepresentation::Kind::Linear)
            return color_linear_interval(*ann.interval, g);
        return compact_colors(color_circular_interval(*ann.interval, g));
    }

    // unhinted pipeline: skeletal reduction, cutset split, alpha <= 2,
    // triad peeling, then the exact oracle inside its cap
    auto [gw, trace] = reduce::make_skeletal(g);
    if (auto cut = find_clique_cutset(gw)) {
        Coloring c = color_with_cutset(gw, cut->first, cut->second, opts, depth);
        return compact_colors(reduce::lift_through_trace(g, trace, c));
    }
    std::optional<Coloring> c;
    if (!detect::find_triad(gw)) {
        c = color_alpha2(gw);
    } else if (auto peeled = peel_good_triads(gw, opts.triad_budget)) {
        c = peeled;
    } else if (gw.n() <= opts.oracle_cap) {
        Coloring exact;
        oracle::chromatic_number(gw, &exact);
        c = exact;
    } else {
        throw coloring_failure("color_claw_free: no structured path and n=" +
                               std::to_string(gw.n()) + " exceeds the oracle cap");
    }
    return compact_colors(reduce::lift_through_trace(g, trace, *c));
}

} // namespace

Coloring color_claw_free(const Graph& g, const Annotation& ann, const ColorOptions& opts) {
    if (auto w = detect::find_claw(g))
        throw contract_error("color_claw_free: input has a claw at vertex " +
                             std::to_string(w->center));
    Coloring c = color_claw_free_impl(g, ann, opts, 0);
    if (!check_coloring(g, c)) throw coloring_failure("color_claw_free: improper coloring");
    if (g.n() > 0 && c.colors_used() > oracle::gamma(g))
        throw coloring_failure("color_claw_free: exceeded the gamma bound");
    return c;
}

} // namespace claw::colorers
