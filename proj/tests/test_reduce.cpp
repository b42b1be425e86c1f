#include "doctest.h"
#include "test_util.hpp"

#include "claw/oracle.hpp"
#include "claw/reduce.hpp"

#include <random>

using namespace claw;
using namespace test_util;
namespace cd = claw::detect;
namespace cr = claw::reduce;

namespace {

/// A small thickening-style fixture used across reduction tests: blow up a
/// base graph and knock a random proper pattern out of one base edge.
Graph fuzzy_blowup(std::mt19937_64& rng, const Graph& base, int max_mult) {
    int nb = base.n();
    std::vector<int> mult(nb);
    std::vector<int> start(nb);
    int n = 0;
    for (int v = 0; v < nb; ++v) {
        mult[v] = 1 + int(rng() % max_mult);
        start[v] = n;
        n += mult[v];
    }
    Graph g(n);
    for (int v = 0; v < nb; ++v)
        for (int i = 0; i < mult[v]; ++i)
            for (int j = i + 1; j < mult[v]; ++j) g.add_edge(start[v] + i, start[v] + j);
    for (auto [u, v] : base.edges())
        for (int i = 0; i < mult[u]; ++i)
            for (int j = 0; j < mult[v]; ++j) g.add_edge(start[u] + i, start[v] + j);
    // fuzz one edge whose join has at least two cross pairs
    auto edges = base.edges();
    for (int tries = 0; tries < 20; ++tries) {
        auto [u, v] = edges[rng() % edges.size()];
        int pairs = mult[u] * mult[v];
        if (pairs < 2) continue;
        int removed = 1 + int(rng() % (pairs - 1));
        std::vector<int> idx(pairs);
        for (int i = 0; i < pairs; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int r = 0; r < removed; ++r)
            g.remove_edge(start[u] + idx[r] / mult[v], start[v] + idx[r] % mult[v]);
        break;
    }
    return g;
}

} // namespace

TEST_CASE("skeletal_reduce_pair rejects already skeletal pairs") {
    // no cross edges at all: skeletal with empty join
    Graph g0(4);
    g0.add_edge(0, 1);
    CHECK_THROWS_AS(
        cr::skeletal_reduce_pair(g0, Bitset::of(4, {0, 1}), Bitset::of(4, {2})),
        contract_error);
    // complete join bigger than either side: every removal lowers omega
    Graph g1(3);
    g1.add_edge(0, 1);
    g1.add_edge(0, 2);
    g1.add_edge(1, 2);
    CHECK_THROWS_AS(
        cr::skeletal_reduce_pair(g1, Bitset::of(3, {0, 1}), Bitset::of(3, {2})),
        contract_error);
}

TEST_CASE("single removable cross edge is a nonskeletal join") {
    // A = {0,1}, B = {2}, cross edge 0-2 only: removing it keeps
    // omega(G[A u B]) = |A|, so the pair reduces to the empty join
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    VertexSet a = Bitset::of(4, {0, 1}), b = Bitset::of(4, {2});
    CHECK(cd::classify_pair(g, a, b) == cd::PairKind::LinearNonskeletal);
    auto [h, step] = cr::skeletal_reduce_pair(g, a, b);
    CHECK(step.removed_edges == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(cd::classify_pair(h, a, b) == cd::PairKind::Skeletal);
}

TEST_CASE("skeletal_reduce_pair on the pendant instance") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto p = cd::find_nonskeletal_linear_hpoc(g);
    REQUIRE(p.has_value());
    int omega_before = cd::cobipartite_clique_number(g, p->a, p->b);
    auto [h, step] = cr::skeletal_reduce_pair(g, p->a, p->b);
    CHECK(h.m() < g.m());
    CHECK(cd::classify_pair(h, p->a, p->b) == cd::PairKind::Skeletal);
    CHECK(cd::cobipartite_clique_number(h, p->a, p->b) == omega_before);
}

TEST_CASE("make_skeletal: skeletal input is untouched") {
    Graph c5 = cycle_graph(5);
    auto [h, trace] = cr::make_skeletal(c5);
    CHECK(trace.empty());
    CHECK(h == c5);
}

TEST_CASE("make_skeletal leaves no nonskeletal pair (exhaustive check)") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 60; ++it) {
        Graph base = it % 2 ? cycle_graph(4 + int(rng() % 3)) : path_graph(3 + int(rng() % 3));
        Graph g = fuzzy_blowup(rng, base, 2);
        if (g.n() > 11) continue;
        auto [h, trace] = cr::make_skeletal(g);
        for (auto& [a, b] : all_hpocs(h))
            CHECK(cd::classify_pair(h, a, b) == cd::PairKind::Skeletal);
        CHECK(int(trace.steps.size()) <= g.m());
    }
}

TEST_CASE("reduction preserves chi, claw-freeness, quasi-line-ness") {
    std::mt19937_64 rng(202);
    int reduced_count = 0;
    for (int it = 0; it < 60; ++it) {
        Graph base = cycle_graph(4 + int(rng() % 4));
        Graph g = fuzzy_blowup(rng, base, 2);
        if (g.n() > 14) continue;
        bool claw_free = !cd::find_claw(g).has_value();
        bool quasi = cd::is_quasi_line(g);
        auto [h, trace] = cr::make_skeletal(g);
        if (!trace.empty()) ++reduced_count;
        CHECK(oracle::chromatic_number(h) == oracle::chromatic_number(g));
        if (claw_free) CHECK(!cd::find_claw(h).has_value());
        if (quasi) CHECK(cd::is_quasi_line(h));
    }
    CHECK(reduced_count > 0);
}

TEST_CASE("reduction preserves chi_f") {
    std::mt19937_64 rng(303);
    int reduced_count = 0;
    for (int it = 0; it < 25; ++it) {
        Graph base = cycle_graph(4 + int(rng() % 3));
        Graph g = fuzzy_blowup(rng, base, 2);
        if (g.n() > 13) continue;
        auto [h, trace] = cr::make_skeletal(g);
        if (trace.empty()) continue;
        ++reduced_count;
        CHECK(oracle::fractional_chromatic(h) == oracle::fractional_chromatic(g));
    }
    CHECK(reduced_count > 0);
}

TEST_CASE("reduction preserves 3-colorability of the complement") {
    // three-cliqued instances: complement chromatic number stays 3
    std::mt19937_64 rng(404);
    int three_cliqued = 0;
    for (int it = 0; it < 80 && three_cliqued < 12; ++it) {
        Graph base = cycle_graph(4 + int(rng() % 3));
        Graph g = fuzzy_blowup(rng, base, 2);
        if (g.n() > 12) continue;
        if (oracle::chromatic_number(complement(g)) != 3) continue;
        ++three_cliqued;
        auto [h, trace] = cr::make_skeletal(g);
        CHECK(oracle::chromatic_number(complement(h)) == 3);
    }
    CHECK(three_cliqued > 0);
}

TEST_CASE("lift through an empty trace is the identity") {
    Graph g = cycle_graph(5);
    Coloring c;
    oracle::chromatic_number(g, &c);
    Coloring lifted = cr::lift_through_trace(g, cr::ReductionTrace{}, c);
    CHECK(lifted.color == c.color);
}

TEST_CASE("lift returns proper colorings with unchanged color count") {
    std::mt19937_64 rng(505);
    int lifted_count = 0;
    for (int it = 0; it < 120; ++it) {
        Graph base = it % 2 ? cycle_graph(4 + int(rng() % 4)) : path_graph(4 + int(rng() % 3));
        Graph g = fuzzy_blowup(rng, base, 3);
        if (g.n() > 15) continue;
        auto [h, trace] = cr::make_skeletal(g);
        if (trace.empty()) continue;
        ++lifted_count;
        Coloring ch;
        int k = oracle::chromatic_number(h, &ch);
        Coloring cg = cr::lift_through_trace(g, trace, ch);
        CHECK(check_coloring(g, cg));
        CHECK(cg.colors_used() == k);
        CHECK(k == oracle::chromatic_number(g));
    }
    CHECK(lifted_count >= 30);
}

TEST_CASE("two-step traces on disjoint pairs lift either way") {
    // two separate pendant-clique gadgets in one graph
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    auto [h, trace] = cr::make_skeletal(g);
    REQUIRE(trace.steps.size() == 2);
    Coloring ch;
    int k = oracle::chromatic_number(h, &ch);
    Coloring cg = cr::lift_through_trace(g, trace, ch);
    CHECK(check_coloring(g, cg));
    CHECK(cg.colors_used() == k);

    cr::ReductionTrace swapped;
    swapped.steps = {trace.steps[1], trace.steps[0]};
    Coloring cg2 = cr::lift_through_trace(g, swapped, ch);
    CHECK(check_coloring(g, cg2));
    CHECK(cg2.colors_used() == k);
}

namespace {

/// Exhaustive check: does ANY assignment giving side A exactly the colors of
/// sa and side B those of sb properly color the cobipartite subgraph?
bool exhaustive_lift_exists(const Graph& g, const VertexSet& a, const VertexSet& b,
                            std::vector<int> sa, std::vector<int> sb) {
    auto av = a.to_vector();
    auto bv = b.to_vector();
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    do {
        bool a_ok = true;
        do {
            bool ok = true;
            for (size_t i = 0; i < av.size() && ok; ++i)
                for (size_t j = 0; j < bv.size() && ok; ++j)
                    if (g.adjacent(av[i], bv[j]) && sa[i] == sb[j]) ok = false;
            if (ok) return true;
        } while (std::next_permutation(sb.begin(), sb.end()));
        (void)a_ok;
    } while (std::next_permutation(sa.begin(), sa.end()));
    return false;
}

} // namespace

TEST_CASE("lift recoloring agrees with exhaustive assignment search") {
    std::mt19937_64 rng(606);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 40; ++it) {
        Graph base = it % 2 ? cycle_graph(4 + int(rng() % 3)) : path_graph(4 + int(rng() % 2));
        Graph g = fuzzy_blowup(rng, base, 2);
        auto p = cd::find_nonskeletal_hpoc(g);
        if (!p) continue;
        if (p->a.count() + p->b.count() > 10 || p->a.count() > 5 || p->b.count() > 5) continue;
        auto [h, step] = cr::skeletal_reduce_pair(g, p->a, p->b);
        Coloring ch;
        oracle::chromatic_number(h, &ch);
        Coloring lifted = cr::lift_coloring(g, step, ch);
        CHECK(check_coloring(g, lifted));
        // same color sets per side as the reduced coloring
        std::vector<int> sa, sb, la, lb;
        CLAW_FOR_SET(u, p->a) {
            sa.push_back(ch.color[u]);
            la.push_back(lifted.color[u]);
        }
        CLAW_FOR_SET(v, p->b) {
            sb.push_back(ch.color[v]);
            lb.push_back(lifted.color[v]);
        }
        std::sort(sa.begin(), sa.end());
        std::sort(la.begin(), la.end());
        std::sort(sb.begin(), sb.end());
        std::sort(lb.begin(), lb.end());
        CHECK(sa == la);
        CHECK(sb == lb);
        // the exhaustive search must agree a valid assignment exists
        CHECK(exhaustive_lift_exists(g, p->a, p->b, sa, sb));
        ++checked;
    }
    CHECK(checked >= 40);
}
