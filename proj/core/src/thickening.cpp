#include "claw/thickening.hpp"

#include <numeric>

namespace claw {

int ThickeningSpec::total_vertices() const {
    return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

std::vector<int> ThickeningSpec::class_starts() const {
    std::vector<int> start(base.n(), 0);
    for (int v = 1; v < base.n(); ++v) start[v] = start[v - 1] + multiplicity[v - 1];
    return start;
}

void ThickeningSpec::validate() const {
    if (int(multiplicity.size()) != base.n())
        throw contract_error("ThickeningSpec: multiplicity size mismatch");
    for (int m : multiplicity)
        if (m < 1) throw contract_error("ThickeningSpec: multiplicity must be positive");
    std::vector<char> touched(base.n(), 0);
    for (const auto& f : fuzzy) {
        if (!base.adjacent(f.u, f.v))
            throw contract_error("ThickeningSpec: fuzzy pair is not a base edge");
        if (touched[f.u] || touched[f.v])
            throw contract_error("ThickeningSpec: fuzzy edges must form a matching");
        touched[f.u] = touched[f.v] = 1;
        int pairs = multiplicity[f.u] * multiplicity[f.v];
        if (f.removed.empty() || int(f.removed.size()) >= pairs)
            throw contract_error("ThickeningSpec: removed pattern must be a nonempty proper subset");
        for (auto [i, j] : f.removed)
            if (i < 0 || i >= multiplicity[f.u] || j < 0 || j >= multiplicity[f.v])
                throw contract_error("ThickeningSpec: removed pattern index out of range");
    }
}

Graph ThickeningSpec::realize(std::vector<int>* vertex_to_base) const {
    validate();
    auto start = class_starts();
    int n = total_vertices();
    Graph g(n);
    if (vertex_to_base) {
        vertex_to_base->assign(n, -1);
        for (int v = 0; v < base.n(); ++v)
            for (int i = 0; i < multiplicity[v]; ++i) (*vertex_to_base)[start[v] + i] = v;
    }
    for (int v = 0; v < base.n(); ++v)
        for (int i = 0; i < multiplicity[v]; ++i)
            for (int j = i + 1; j < multiplicity[v]; ++j)
                g.add_edge(start[v] + i, start[v] + j);
    for (auto [u, v] : base.edges())
        for (int i = 0; i < multiplicity[u]; ++i)
            for (int j = 0; j < multiplicity[v]; ++j) g.add_edge(start[u] + i, start[v] + j);
    for (const auto& f : fuzzy)
        for (auto [i, j] : f.removed) g.remove_edge(start[f.u] + i, start[f.v] + j);
    return g;
}

std::string family_name(ThickeningSpec::Family f) {
    switch (f) {
    case ThickeningSpec::Family::Generic: return "generic";
    case ThickeningSpec::Family::IcosahedralG0: return "icosahedral-G0";
    case ThickeningSpec::Family::IcosahedralG1: return "icosahedral-G1";
    case ThickeningSpec::Family::IcosahedralG2: return "icosahedral-G2";
    case ThickeningSpec::Family::Antihat: return "antihat";
    case ThickeningSpec::Family::StripInternal: return "strip-internal";
    }
    return "generic";
}

ThickeningSpec::Family family_from_name(const std::string& s) {
    if (s == "icosahedral-G0") return ThickeningSpec::Family::IcosahedralG0;
    if (s == "icosahedral-G1") return ThickeningSpec::Family::IcosahedralG1;
    if (s == "icosahedral-G2") return ThickeningSpec::Family::IcosahedralG2;
    if (s == "antihat") return ThickeningSpec::Family::Antihat;
    if (s == "strip-internal") return ThickeningSpec::Family::StripInternal;
    return ThickeningSpec::Family::Generic;
}

} // namespace claw
