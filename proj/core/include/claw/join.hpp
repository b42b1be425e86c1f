#ifndef CLAW_JOIN_HPP
#define CLAW_JOIN_HPP

#include "claw/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace claw {

/// A generalized 2-join ((X1,Y1),(X2,Y2)): X1 u X2 and Y1 u Y2 are cliques
/// and there are no other edges between V1 and V2 = x2 u y2 u strip labels.
/// strip_labels name the strip's thickening classes (e.g. "v3" in a gear
/// strip for I(v3)); they partition V2. For canonical-interval joins,
/// strip_order is a linear interval order of V2 with X2 leftmost and Y2
/// rightmost.
struct JoinAnnotation {
    enum class Kind { CanonicalInterval, Antihat, Strange, PseudoLine, Gear };

    Kind kind = Kind::CanonicalInterval;
    VertexSet x1, y1, x2, y2;
    std::map<std::string, VertexSet> strip_labels;
    std::vector<int> strip_order;

    VertexSet v2(int n) const;
    VertexSet v1(int n) const;
    VertexSet label(const std::string& name, int n) const; // empty set if absent

    /// Join-structure invariants; throws contract_error.
    void validate(const Graph& g) const;
};

std::string join_kind_name(JoinAnnotation::Kind k);
JoinAnnotation::Kind join_kind_from_name(const std::string& s);

/// Per-join quantities of the extension lemmas: omega'(v) is the largest
/// clique of H2 = G[V2 u X1 u Y1] through v avoiding at least one of
/// X1 \ Y1 and Y1 \ X1; the local and global thresholds combine omega'
/// with degrees taken in the full graph.
struct JoinContext {
    std::map<int, int> omega_prime;
    int gamma_lj = 0;
    int gamma_gj = 0;
};

JoinContext compute_join_context(const Graph& g, const JoinAnnotation& j);

} // namespace claw

#endif
