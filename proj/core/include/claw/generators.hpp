#ifndef CLAW_GENERATORS_HPP
#define CLAW_GENERATORS_HPP

#include "claw/instance.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace claw::gen {

/// Loopless multigraph, stored as an edge multiset.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// All randomness in the generators flows from one of these; identical seeds
/// give identical outputs.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t raw() { return eng(); }
    int below(int n) { return int(eng() % uint64_t(n)); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

/// Raised when rejection sampling exhausts its retry budget.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// L(h): one vertex per edge, adjacency iff the edges share an endpoint.
/// vertex_to_edge maps each line-graph vertex back to its multigraph edge.
Graph line_graph(const Multigraph& h, std::vector<std::pair<int, int>>* vertex_to_edge = nullptr);

Multigraph random_multigraph(Rng& rng, int n, int m);

/// Random line-graph instance (claw-free by construction).
Instance gen_line_graph(uint64_t seed, int base_n, int base_m);

/// Random linear or circular interval instance with its representation.
/// force_long keeps every arc short enough that no three cover the circle.
Instance gen_interval(uint64_t seed, int n, IntervalRepresentation::Kind kind,
                      bool force_long = false);

/// Thickening of a claw-free base with a random fuzzy matching; rejection
/// sampling keeps only claw-free realizations.
std::pair<ThickeningSpec, Graph> gen_thickening(uint64_t seed, const Graph& base,
                                                ThickeningSpec::Family family, int max_mult,
                                                double fuzz_prob);

enum class IcosahedralKind { G0, G1, G2 };

/// The explicit icosahedron and its two derivatives.
Graph icosahedron_base(IcosahedralKind which);

/// Thickening of G0 / G1 (proper) or of G2 u M under M within {v1v4, v6v9}.
std::pair<ThickeningSpec, Graph> gen_icosahedral(uint64_t seed, IcosahedralKind which,
                                                 int max_mult);

/// The antihat base on cliques A = {a_0..a_k}, B = {b_0..b_k}, C = {c_1..c_k}
/// (without the optional a0 b0 edge). Layout: a_i -> i, b_i -> k+1+i,
/// c_i -> 2k+1+i.
Graph antihat_graph(int k);

/// The 10-vertex gear base; v_i -> i-1.
Graph gear_base();

/// The 7-vertex strange base; a1 a2 b1 b2 b3 c1 c2 -> 0..6.
Graph strange_base();

struct AntihatParams {
    int k = 2;
    int max_mult = 2;
    double remove_prob = 0.25; // per eligible vertex chance of joining X
    double fuzz_prob = 0.5;    // per eligible pair chance of joining M
    int a0b0_mode = -1;        // -1 random; 0 absent; 1 fuzzy pair (edge or not)
};

struct AntihatInstance {
    ThickeningSpec spec;
    Graph g;
    ThreeCliques cliques; // I(A\X), I(B\X), I(C\X)
    /// base-vertex index of each named antihat vertex, -1 when removed by X:
    /// a[i], b[i] for 0..k, c[i] for 1..k (index 0 unused)
    std::vector<int> a, b, c;
};

AntihatInstance gen_antihat(uint64_t seed, const AntihatParams& params);

/// Hex-join of two three-cliqued terms: complete links A1A2, A2B1, B1B2,
/// B2C1, C1C2, C2A1; result three-cliqued by (A1uA2, B1uB2, C1uC2).
std::pair<Graph, ThreeCliques> hex_join(const Graph& g1, const ThreeCliques& t1,
                                        const Graph& g2, const ThreeCliques& t2);

/// Random hex-join composite built from the three-cliqued families.
Instance gen_hex_join(uint64_t seed, int terms = 2);

/// Random three-cliqued term for hex joins: triangle blow-ups, antihat
/// thickenings, or three-cliqued circular interval graphs.
std::pair<Graph, ThreeCliques> gen_three_cliqued_term(Rng& rng, int max_base);

struct StripCompositeParams {
    int host_n = 7;      // host linear interval graph size
    int x1_size = 2;
    int y1_size = 2;
    int strip_extra = 3; // strip size knob (canonical kind)
    int max_mult = 2;
    /// keep sampling until oracle chi(G1) fits under the join threshold, so
    /// the extension lemmas apply at the exact threshold
    bool host_within_threshold = true;
};

/// Host + strip glued along a generalized 2-join of the given kind, with the
/// full annotation the extension procedures consume.
Instance gen_strip_composite(uint64_t seed, JoinAnnotation::Kind kind,
                             const StripCompositeParams& params = {});

/// True iff some vertex's neighborhood contains an induced C5.
bool contains_w5(const Graph& g);

} // namespace claw::gen

#endif
