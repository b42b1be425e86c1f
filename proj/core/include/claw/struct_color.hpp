#ifndef CLAW_STRUCT_COLOR_HPP
#define CLAW_STRUCT_COLOR_HPP

#include "claw/instance.hpp"

#include <optional>
#include <stdexcept>

namespace claw::colorers {

/// A colorer gave up or a guaranteed step failed; never a silent wrong answer.
struct coloring_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ColorOptions {
    int triad_budget = 4096; // good-triad peels before giving up
    int oracle_cap = 24;     // exact-chi fallback ceiling
};

/// Good-triad peeling: make the graph skeletal, finish with the matching
/// colorer once no triad remains, otherwise peel a good triad into a fresh
/// color class and recurse. Returns nothing if some non-degenerate step has
/// no good triad or the budget runs out.
std::optional<Coloring> peel_good_triads(const Graph& g, int budget = 4096);

/// Icosahedral-thickening colorer: strips the stable-set batches of the
/// icosahedral family (four per round on G0/G1 patterns, two on G2) until a
/// degenerate residue remains, which is dispatched to the matching /
/// peeling / interval pipelines.
Coloring color_icosahedral(const ThickeningSpec& spec, const Graph& g,
                           const ColorOptions& opts = {});

/// Extension of a proper coloring of G1 across each kind of generalized
/// 2-join, using at most l colors total. l must be at least the join
/// threshold (gamma_lj, or gamma_gj for pseudo-line joins), and c1 must be a
/// proper coloring of G1 with colors below l.
/// extend_canonical_interval never recolors V1; the other four may permute
/// colors on V1 first (the normal form their procedures require).
Coloring extend_canonical_interval(const Graph& g, const JoinAnnotation& j,
                                   const Coloring& c1, int l);
Coloring extend_antihat(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts = {});
Coloring extend_strange(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                        const ColorOptions& opts = {});
Coloring extend_gear(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                     const ColorOptions& opts = {});
Coloring extend_pseudo_line(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                            const ColorOptions& opts = {});

/// Dispatch on the annotation kind.
Coloring extend_join(const Graph& g, const JoinAnnotation& j, const Coloring& c1, int l,
                     const ColorOptions& opts = {});

/// Decompose on a clique cutset if one is found: (cutset, one side's
/// component). Sound but not guaranteed complete; every returned cutset is
/// verified to be a separating clique.
std::optional<std::pair<VertexSet, VertexSet>> find_clique_cutset(const Graph& g);

/// Full pipeline: make skeletal, split on clique cutsets, then the hinted
/// structured colorer (join extension / icosahedral / interval / alpha2 /
/// good-triad peeling), with a budgeted exact-oracle fallback. The result is
/// proper and uses at most gamma(g) colors; throws coloring_failure instead
/// of returning a bad coloring.
Coloring color_claw_free(const Graph& g, const Annotation& ann = {},
                         const ColorOptions& opts = {});

} // namespace claw::colorers

#endif
