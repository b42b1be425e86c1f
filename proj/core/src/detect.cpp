#include "claw/detect.hpp"
#include "claw/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace claw::detect {

std::optional<ClawWitness> find_claw(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v).to_vector();
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                // third leaf: neighbor of v past nb[j], nonadjacent to both
                Bitset cand = g.neighbors(v);
                cand -= g.neighbors(nb[i]);
                cand -= g.neighbors(nb[j]);
                for (int w = cand.next(nb[j] + 1); w >= 0; w = cand.next(w + 1)) {
                    return ClawWitness{v, {nb[i], nb[j], w}};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            CLAW_FOR_SET(v, g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

bool is_quasi_line(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        Graph nbhd = induced(g, g.neighbors(v));
        if (!is_bipartite(complement(nbhd))) return false;
    }
    return true;
}

std::vector<VertexSet> twin_classes(const Graph& g) {
    std::map<Bitset, VertexSet> groups;
    for (int v = 0; v < g.n(); ++v) {
        Bitset key = g.closed_neighborhood(v);
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, VertexSet(g.n())).first;
        it->second.add(v);
    }
    std::vector<VertexSet> out;
    out.reserve(groups.size());
    for (auto& [key, cls] : groups) out.push_back(cls);
    std::sort(out.begin(), out.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.first() < y.first(); });
    return out;
}

bool trumps(const Graph& g, int u, int v) {
    if (u == v) throw contract_error("trumps: u == v");
    return g.closed_neighborhood(v).proper_subset_of(g.closed_neighborhood(u));
}

namespace {

/// Try to justify every vertex outside {t0,t1,t2}; nullopt if some vertex
/// has no justification.
std::optional<TriadCertificate> certify_triad(const Graph& g, int t0, int t1, int t2) {
    TriadCertificate cert;
    cert.triad[0] = t0;
    cert.triad[1] = t1;
    cert.triad[2] = t2;
    cert.justification.assign(g.n(), {TriadReason::TwoNeighbors, -1});
    int triad[3] = {t0, t1, t2};
    for (int x = 0; x < g.n(); ++x) {
        if (x == t0 || x == t1 || x == t2) continue;
        int nb = 0;
        for (int t : triad) nb += g.adjacent(x, t);
        if (nb >= 2) {
            cert.justification[x] = {TriadReason::TwoNeighbors, -1};
            continue;
        }
        bool ok = false;
        for (int t : triad) {
            if (twins(g, x, t)) {
                cert.justification[x] = {TriadReason::Twin, t};
                ok = true;
                break;
            }
        }
        if (!ok) {
            for (int t : triad) {
                if (trumps(g, t, x)) {
                    cert.justification[x] = {TriadReason::Trumped, t};
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) return std::nullopt;
    }
    return cert;
}

} // namespace

bool verify_triad_certificate(const Graph& g, const TriadCertificate& cert) {
    int t0 = cert.triad[0], t1 = cert.triad[1], t2 = cert.triad[2];
    if (g.adjacent(t0, t1) || g.adjacent(t0, t2) || g.adjacent(t1, t2)) return false;
    for (int x = 0; x < g.n(); ++x) {
        if (x == t0 || x == t1 || x == t2) continue;
        const auto& j = cert.justification[x];
        switch (j.reason) {
        case TriadReason::TwoNeighbors: {
            int nb = g.adjacent(x, t0) + g.adjacent(x, t1) + g.adjacent(x, t2);
            if (nb < 2) return false;
            break;
        }
        case TriadReason::Twin:
            if (j.witness != t0 && j.witness != t1 && j.witness != t2) return false;
            if (!twins(g, x, j.witness)) return false;
            break;
        case TriadReason::Trumped:
            if (j.witness != t0 && j.witness != t1 && j.witness != t2) return false;
            if (!trumps(g, j.witness, x)) return false;
            break;
        }
    }
    return true;
}

std::optional<std::array<int, 3>> find_triad(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        Bitset rest = g.all_vertices();
        rest -= g.neighbors(u);
        for (int v = rest.next(u + 1); v >= 0; v = rest.next(v + 1)) {
            Bitset third = rest - g.neighbors(v);
            int w = third.next(v + 1);
            if (w >= 0) return std::array<int, 3>{u, v, w};
        }
    }
    return std::nullopt;
}

std::optional<TriadCertificate> find_good_triad(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        Bitset rest = g.all_vertices();
        rest -= g.neighbors(u);
        for (int v = rest.next(u + 1); v >= 0; v = rest.next(v + 1)) {
            Bitset third = rest - g.neighbors(v);
            for (int w = third.next(v + 1); w >= 0; w = third.next(w + 1)) {
                auto cert = certify_triad(g, u, v, w);
                if (cert) return cert;
            }
        }
    }
    return std::nullopt;
}

bool is_homogeneous_pair_of_cliques(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty() || a.intersects(b)) return false;
    if (a.count() + b.count() < 3) return false;
    if (!g.is_clique(a) || !g.is_clique(b)) return false;
    Bitset inside = a | b;
    for (int x = 0; x < g.n(); ++x) {
        if (inside.contains(x)) continue;
        int ca = g.neighbors(x).count_and(a);
        if (ca != 0 && ca != a.count()) return false;
        int cb = g.neighbors(x).count_and(b);
        if (cb != 0 && cb != b.count()) return false;
    }
    return true;
}

namespace {

bool has_cross_c4(const Graph& g, const VertexSet& a, const VertexSet& b) {
    auto av = a.to_vector();
    auto bv = b.to_vector();
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = 0; j < av.size(); ++j) {
            if (i == j) continue;
            for (size_t k = 0; k < bv.size(); ++k)
                for (size_t l = 0; l < bv.size(); ++l) {
                    if (k == l) continue;
                    if (g.adjacent(av[i], bv[k]) && g.adjacent(av[j], bv[l]) &&
                        !g.adjacent(av[i], bv[l]) && !g.adjacent(av[j], bv[k]))
                        return true;
                }
        }
    return false;
}

} // namespace

int cobipartite_clique_number(const Graph& g, const VertexSet& a, const VertexSet& b,
                              VertexSet* keep) {
    auto av = a.to_vector();
    auto bv = b.to_vector();
    std::vector<std::vector<int>> comp(av.size());
    for (size_t i = 0; i < av.size(); ++i)
        for (size_t j = 0; j < bv.size(); ++j)
            if (!g.adjacent(av[i], bv[j])) comp[i].push_back(int(j));
    oracle::Matching m = oracle::max_bipartite_matching(int(av.size()), int(bv.size()), comp);
    if (keep) {
        auto [cl, cr] = oracle::konig_vertex_cover(int(av.size()), int(bv.size()), comp, m);
        *keep = Bitset(a.universe());
        Bitset covered_l(int(av.size())), covered_r(int(bv.size()));
        for (int i : cl) covered_l.add(i);
        for (int j : cr) covered_r.add(j);
        for (size_t i = 0; i < av.size(); ++i)
            if (!covered_l.contains(int(i))) keep->add(av[i]);
        for (size_t j = 0; j < bv.size(); ++j)
            if (!covered_r.contains(int(j))) keep->add(bv[j]);
    }
    return int(av.size() + bv.size()) - m.size();
}

PairKind classify_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!is_homogeneous_pair_of_cliques(g, a, b))
        throw contract_error("classify_pair: not a homogeneous pair of cliques");
    if (has_cross_c4(g, a, b)) return PairKind::Nonlinear;

    // endpoints of cross edges on each side
    VertexSet a_edge(a.universe()), b_edge(b.universe());
    CLAW_FOR_SET(u, a) if (g.neighbors(u).intersects(b)) a_edge.add(u);
    CLAW_FOR_SET(v, b) if (g.neighbors(v).intersects(a)) b_edge.add(v);

    if (a_edge.empty()) return PairKind::Skeletal; // no cross edges: Omega empty

    // complete join between the touched endpoints?
    bool join = true;
    CLAW_FOR_SET(u, a_edge) {
        if (g.neighbors(u).count_and(b) != b_edge.count()) {
            join = false;
            break;
        }
    }
    if (!join) return PairKind::LinearNonskeletal;
    // single-edge removal lowers omega iff the join clique is the unique max
    int omega_join = a_edge.count() + b_edge.count();
    if (omega_join > std::max(a.count(), b.count())) return PairKind::Skeletal;
    return PairKind::LinearNonskeletal;
}

namespace {

/// Grow a seeded pair to the minimal homogeneous pair of cliques containing
/// it; nullopt if some forced vertex cannot be placed.
std::optional<std::pair<VertexSet, VertexSet>>
close_pair(const Graph& g, VertexSet a, VertexSet b) {
    bool changed = true;
    while (changed) {
        changed = false;
        Bitset inside = a | b;
        for (int x = 0; x < g.n(); ++x) {
            if (inside.contains(x)) continue;
            int ca = g.neighbors(x).count_and(a);
            int cb = g.neighbors(x).count_and(b);
            bool split_a = ca != 0 && ca != a.count();
            bool split_b = cb != 0 && cb != b.count();
            if (!split_a && !split_b) continue;
            if (split_a && split_b) return std::nullopt;
            if (split_a) {
                // x misses part of a, so x can only live in b
                if (cb != b.count()) return std::nullopt;
                b.add(x);
            } else {
                if (ca != a.count()) return std::nullopt;
                a.add(x);
            }
            changed = true;
            break;
        }
    }
    return std::make_pair(a, b);
}

} // namespace

std::optional<CliquePair> find_nonlinear_hpoc(const Graph& g) {
    int n = g.n();
    // seeds: induced C4 split into opposite edges (a1 a2 | b1 b2) with
    // cross edges a1b1, a2b2 and non-edges a1b2, a2b1
    for (int a1 = 0; a1 < n; ++a1) {
        for (int a2 = a1 + 1; a2 < n; ++a2) {
            if (!g.adjacent(a1, a2)) continue;
            CLAW_FOR_SET(b1, g.neighbors(a1)) {
                if (b1 == a2 || g.adjacent(b1, a2)) continue;
                Bitset b2cand = g.neighbors(a2) & g.neighbors(b1);
                b2cand -= g.neighbors(a1);
                CLAW_FOR_SET(b2, b2cand) {
                    if (b2 == a1 || b2 == a2 || b2 == b1) continue;
                    VertexSet a0(n), b0(n);
                    a0.add(a1);
                    a0.add(a2);
                    b0.add(b1);
                    b0.add(b2);
                    auto closed = close_pair(g, a0, b0);
                    if (!closed) continue;
                    auto& [a, b] = *closed;
                    if (!is_homogeneous_pair_of_cliques(g, a, b)) continue;
                    return CliquePair{a, b, PairKind::Nonlinear};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<CliquePair> find_nonskeletal_linear_hpoc(const Graph& g,
                                                       bool assume_no_nonlinear) {
    if (!assume_no_nonlinear && find_nonlinear_hpoc(g))
        throw contract_error(
            "find_nonskeletal_linear_hpoc: graph has a nonlinear homogeneous pair");
    int n = g.n();
    std::vector<Bitset> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

    auto classes = twin_classes(g);
    std::vector<int> class_of(n, -1);
    for (int i = 0; i < int(classes.size()); ++i)
        CLAW_FOR_SET(v, classes[i]) class_of[v] = i;

    for (int a1 = 0; a1 < n; ++a1) {
        CLAW_FOR_SET(a2, g.neighbors(a1)) {
            if (!closed[a1].proper_subset_of(closed[a2])) continue;
            Bitset d = closed[a2] - closed[a1];
            if (d.empty()) continue;
            int b1 = d.first();
            if (classes[class_of[b1]] != d) continue; // must be one full twin class
            if (classes[class_of[a1]].count() < d.count()) continue;
            VertexSet a = classes[class_of[a1]] | classes[class_of[a2]];
            if (!is_homogeneous_pair_of_cliques(g, a, d)) continue;
            if (classify_pair(g, a, d) != PairKind::LinearNonskeletal) continue;
            return CliquePair{a, d, PairKind::LinearNonskeletal};
        }
    }
    return std::nullopt;
}

std::optional<CliquePair> find_nonskeletal_hpoc(const Graph& g) {
    if (auto p = find_nonlinear_hpoc(g)) return p;
    return find_nonskeletal_linear_hpoc(g, /*assume_no_nonlinear=*/true);
}

} // namespace claw::detect
