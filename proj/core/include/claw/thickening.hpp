#ifndef CLAW_THICKENING_HPP
#define CLAW_THICKENING_HPP

#include "claw/graph.hpp"

#include <string>
#include <vector>

namespace claw {

/// One fuzzy matching edge of a thickening: a base edge uv together with the
/// nonempty proper subset of I(u) x I(v) pairs that are removed. Pair (i, j)
/// refers to the i-th copy of u and the j-th copy of v.
struct FuzzyEdge {
    int u, v;
    std::vector<std::pair<int, int>> removed;
};

/// Blow-up description: each base vertex v becomes a clique I(v) of size
/// multiplicity[v]; base edges become complete joins, except fuzzy edges
/// which lose their removed pattern. Fuzzy edges must form a matching on the
/// base (the base already contains them as edges; a thickening "under M" of
/// G with M containing non-edges stores G u M here).
struct ThickeningSpec {
    enum class Family { Generic, IcosahedralG0, IcosahedralG1, IcosahedralG2, Antihat, StripInternal };

    Graph base;
    std::vector<int> multiplicity;
    std::vector<FuzzyEdge> fuzzy;
    Family family = Family::Generic;

    int total_vertices() const;
    /// First realized index of each base class; I(v) is consecutive.
    std::vector<int> class_starts() const;

    /// Checks the type invariants; throws contract_error on violation.
    void validate() const;

    /// The blown-up graph. vertex_to_base[i] is the base vertex of realized
    /// vertex i.
    Graph realize(std::vector<int>* vertex_to_base = nullptr) const;
};

std::string family_name(ThickeningSpec::Family f);
ThickeningSpec::Family family_from_name(const std::string& s);

} // namespace claw

#endif
