#ifndef CLAW_DETECT_HPP
#define CLAW_DETECT_HPP

#include "claw/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace claw::detect {

struct ClawWitness {
    int center;
    int leaves[3];
};

/// First claw in lexicographic scan order, or nothing.
std::optional<ClawWitness> find_claw(const Graph& g);

/// True iff the complement of every open neighborhood is bipartite.
bool is_quasi_line(const Graph& g);

/// Equivalence classes of equal closed neighborhoods. Each class is a
/// clique; classes are listed by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);

inline bool twins(const Graph& g, int u, int v) {
    return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

/// u trumps v iff the closed neighborhood of v is a proper subset of u's.
bool trumps(const Graph& g, int u, int v);

enum class TriadReason { TwoNeighbors, Twin, Trumped };

struct TriadJustification {
    TriadReason reason;
    int witness; // the triad member for Twin / Trumped, -1 for TwoNeighbors
};

struct TriadCertificate {
    int triad[3];
    /// For every vertex outside the triad, indexed by vertex; entries for
    /// triad members are unused.
    std::vector<TriadJustification> justification;
};

/// Re-checks every justification literally against the graph.
bool verify_triad_certificate(const Graph& g, const TriadCertificate& cert);

/// First good triad in lexicographic vertex order, with its certificate.
std::optional<TriadCertificate> find_good_triad(const Graph& g);

/// Any stable set of size three, or nothing (alpha <= 2).
std::optional<std::array<int, 3>> find_triad(const Graph& g);

enum class PairKind { Nonlinear, LinearNonskeletal, Skeletal };

struct CliquePair {
    VertexSet a, b;
    PairKind kind;
};

/// True iff (a, b) is a homogeneous pair of cliques: disjoint nonempty
/// cliques, |a u b| >= 3, every outside vertex sees all or none of each.
bool is_homogeneous_pair_of_cliques(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Classification of a verified homogeneous pair of cliques.
/// Nonlinear: the a-b bipartite graph has an induced C4. Skeletal: the a-b
/// edges form a complete join between the endpoints they touch, and removing
/// any single one lowers omega(G[a u b]). Throws contract_error otherwise.
PairKind classify_pair(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Nonlinear homogeneous pair of cliques, if one exists. Seeds from induced
/// C4s and grows each seed to its closure.
std::optional<CliquePair> find_nonlinear_hpoc(const Graph& g);

/// Nonskeletal linear pair via the twin-class path search. Precondition:
/// no nonlinear homogeneous pair of cliques exists (checked unless the
/// caller has just established it).
std::optional<CliquePair> find_nonskeletal_linear_hpoc(const Graph& g,
                                                       bool assume_no_nonlinear = false);

/// Either kind of nonskeletal pair, nonlinear checked first.
std::optional<CliquePair> find_nonskeletal_hpoc(const Graph& g);

/// Clique number of the cobipartite graph induced on two cliques, via a
/// maximum matching in the bipartite complement. If keep != nullptr, also
/// builds a maximum clique constructively (Konig cover complement).
int cobipartite_clique_number(const Graph& g, const VertexSet& a, const VertexSet& b,
                              VertexSet* keep = nullptr);

} // namespace claw::detect

#endif
