// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; quantities come from the exact oracles.

#include "claw/campaign.hpp"
#include "claw/detect.hpp"
#include "claw/dimacs.hpp"
#include "claw/generators.hpp"
#include "claw/interval.hpp"
#include "claw/json_io.hpp"
#include "claw/oracle.hpp"
#include "claw/reduce.hpp"
#include "claw/struct_color.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace claw;
namespace cg = claw::gen;
namespace cd = claw::detect;
namespace cc = claw::colorers;
namespace co = claw::oracle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& label, const Outcome& out) {
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label
              << " — " << out.detail << std::endl;
    if (!out.pass) ++g_failures;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// ---------------------------------------------------------------- criterion 1

Outcome conjecture_bound() {
    long total = 0, violations = 0, skipped_large = 0;
    int worst_slack = -1;
    std::map<std::string, int> per_family;
    for (const auto& family : campaign_families()) {
        for (uint64_t seed = 0; seed < 75; ++seed) {
            Instance inst;
            try {
                inst = generate_family(family, seed);
            } catch (const std::exception&) {
                continue;
            }
            if (inst.g.n() > 18) {
                ++skipped_large;
                continue;
            }
            ++total;
            ++per_family[family];
            bool ok = !cd::find_claw(inst.g).has_value();
            int chi = co::chromatic_number(inst.g);
            int gamma = co::gamma(inst.g);
            ok = ok && chi <= gamma;
            Coloring c = cc::color_claw_free(inst.g, inst.ann);
            ok = ok && check_coloring(inst.g, c) && c.colors_used() <= gamma;
            if (!ok) ++violations;
            int slack = gamma - chi;
            if (worst_slack < 0 || slack < worst_slack) worst_slack = slack;
        }
    }
    bool families_covered = true;
    int min_family = 1 << 30;
    for (const auto& family : campaign_families()) {
        if (per_family[family] < 25) families_covered = false;
        min_family = std::min(min_family, per_family[family]);
    }
    std::ostringstream d;
    d << "chi<=gamma and pipeline<=gamma on " << (total - violations) << "/" << total
      << " instances (every family, n<=18, min per family " << min_family
      << ", worst slack " << worst_slack << ", skipped oversized " << skipped_large << ")";
    return {total >= 1000 && violations == 0 && families_covered && worst_slack >= 0, d.str()};
}

// ---------------------------------------------------------------- criterion 2

Outcome local_bound_three_cliqued() {
    long total = 0, violations = 0;
    auto check_one = [&](const Graph& g, const ThreeCliques& t, const Annotation& ann) {
        if (g.n() > 18) return;
        ++total;
        bool ok = true;
        try {
            t.validate(g);
        } catch (const std::exception&) {
            ok = false;
        }
        int gl = co::gamma_local(g);
        ok = ok && co::chromatic_number(g) <= gl;
        Coloring c = cc::color_claw_free(g, ann);
        ok = ok && check_coloring(g, c) && c.colors_used() <= gl;
        if (!ok) ++violations;
    };
    for (uint64_t seed = 0; seed < 130; ++seed) {
        cg::AntihatParams p;
        p.k = 2 + int(seed % 2);
        p.max_mult = 1 + int(seed % 2);
        auto inst = cg::gen_antihat(seed, p);
        Annotation ann;
        ann.thickening = inst.spec;
        ann.three_cliques = inst.cliques;
        check_one(inst.g, inst.cliques, ann);
    }
    for (uint64_t seed = 0; seed < 130; ++seed) {
        Instance inst = cg::gen_hex_join(seed);
        check_one(inst.g, *inst.ann.three_cliques, inst.ann);
    }
    // gear strips standalone, three-cliqued as (v1 v2 v7 | v3 v4 v9 | v5 v6 v8 v10)
    int gear_done = 0;
    for (uint64_t seed = 0; gear_done < 70 && seed < 200; ++seed) {
        Instance comp;
        try {
            cg::StripCompositeParams sp;
            sp.host_within_threshold = false;
            comp = cg::gen_strip_composite(seed, JoinAnnotation::Kind::Gear, sp);
        } catch (const cg::generation_error&) {
            continue;
        }
        const auto& j = *comp.ann.join;
        int n = comp.g.n();
        VertexSet v2 = j.v2(n);
        std::vector<int> old_to_new;
        Graph strip = induced(comp.g, v2, &old_to_new);
        auto part = [&](std::initializer_list<const char*> names) {
            VertexSet s(strip.n());
            for (const char* name : names) {
                Bitset full = j.label(name, n);
                CLAW_FOR_SET(v, full) s.add(old_to_new[v]);
            }
            return s;
        };
        ThreeCliques t{part({"v1", "v2", "v7"}), part({"v3", "v4", "v9"}),
                       part({"v5", "v6", "v8", "v10"})};
        Annotation ann;
        ann.three_cliques = t;
        ++gear_done;
        check_one(strip, t, ann);
    }
    std::ostringstream d;
    d << "chi<=gamma_local and pipeline<=gamma_local on " << (total - violations) << "/"
      << total << " three-cliqued instances";
    return {total >= 300 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 3

Outcome skeletal_reduction_soundness() {
    long total = 0, violations = 0;
    uint64_t seed = 0;
    while (total < 500 && seed < 3000) {
        uint64_t s = seed++;
        cg::Rng pick(s * 77 + 5);
        Graph base;
        switch (pick.below(4)) {
        case 0: base = cycle(5); break;
        case 1: base = cycle(6); break;
        case 2: base = path(5); break;
        default: base = cg::icosahedron_base(cg::IcosahedralKind::G2); break;
        }
        ThickeningSpec spec;
        Graph g;
        try {
            std::tie(spec, g) = cg::gen_thickening(s, base, ThickeningSpec::Family::Generic,
                                                   2, 0.8);
        } catch (const std::exception&) {
            continue;
        }
        if (spec.fuzzy.empty() || g.n() > 16) continue;
        ++total;
        bool ok = true;
        auto [h, trace] = reduce::make_skeletal(g);
        int chi_g = co::chromatic_number(g);
        int chi_h = co::chromatic_number(h);
        ok = ok && chi_g == chi_h;
        ok = ok && !cd::find_claw(g) == !cd::find_claw(h);
        if (!cd::find_claw(g)) ok = ok && !cd::find_claw(h);
        int cochi = co::chromatic_number(complement(g));
        if (cochi == 3) ok = ok && co::chromatic_number(complement(h)) == 3;
        Coloring ch;
        co::chromatic_number(h, &ch);
        Coloring lifted = reduce::lift_through_trace(g, trace, ch);
        ok = ok && check_coloring(g, lifted) && lifted.colors_used() == ch.colors_used();
        if (!ok) ++violations;
    }
    std::ostringstream d;
    d << "chi preserved, claw-freeness kept, complement 3-coloring kept, lifts proper on "
      << (total - violations) << "/" << total << " fuzzy thickenings";
    return {total >= 500 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 4

Outcome alpha2_optimality() {
    long total = 0, violations = 0;
    std::mt19937_64 rng(2024);
    while (total < 300) {
        int n = 4 + int(rng() % 11);
        Graph h(n);
        std::bernoulli_distribution coin(0.3);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) h.add_edge(i, j);
        if (co::clique_number(h) > 2) continue; // need a triangle-free complement
        Graph g = complement(h);
        ++total;
        Coloring c = cc::color_alpha2(g);
        int chi = co::chromatic_number(g);
        int matching = co::max_matching(h).size();
        bool ok = check_coloring(g, c) && c.colors_used() == chi &&
                  c.colors_used() == n - matching;
        if (!ok) ++violations;
    }
    std::ostringstream d;
    d << "matching colorer == chi == n - matching on " << (total - violations) << "/" << total
      << " complements of triangle-free graphs";
    return {total >= 300 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 5

Outcome circular_roundup() {
    long total = 0, violations = 0;
    for (uint64_t seed = 0; total < 200; ++seed) {
        int n = 6 + int(seed % 11);
        Instance inst = cg::gen_interval(seed, n, IntervalRepresentation::Kind::Circular);
        ++total;
        Coloring c = cc::color_circular_interval(*inst.ann.interval, inst.g);
        int chi = co::chromatic_number(inst.g);
        long roundup = co::fractional_chromatic(inst.g).ceil_long();
        bool ok = check_coloring(inst.g, c) && c.colors_used() == chi && chi == roundup;
        if (!ok) ++violations;
    }
    std::ostringstream d;
    d << "colorer == chi == ceil(chi_f) on " << (total - violations) << "/" << total
      << " circular interval graphs";
    return {total >= 200 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 6

Outcome good_triad_contract() {
    long found = 0, violations = 0;
    for (const auto& family : campaign_families()) {
        for (uint64_t seed = 0; seed < 12; ++seed) {
            Instance inst;
            try {
                inst = generate_family(family, seed);
            } catch (const std::exception&) {
                continue;
            }
            if (inst.g.n() > 18) continue;
            auto [gw, trace] = reduce::make_skeletal(inst.g);
            auto cert = cd::find_good_triad(gw);
            if (!cert) continue;
            ++found;
            bool ok = cd::verify_triad_certificate(gw, *cert);
            VertexSet keep = gw.all_vertices();
            for (int t : cert->triad) keep.remove(t);
            ok = ok && co::gamma_local(induced(gw, keep)) <= co::gamma_local(gw) - 1;
            if (!ok) ++violations;
        }
    }
    std::ostringstream d;
    d << "certificates verify and gamma_local drops on " << (found - violations) << "/"
      << found << " returned triads";
    return {found >= 60 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 7

Outcome icosahedral_exactness() {
    bool base_ok;
    {
        ThickeningSpec spec;
        spec.base = cg::icosahedron_base(cg::IcosahedralKind::G0);
        spec.family = ThickeningSpec::Family::IcosahedralG0;
        spec.multiplicity.assign(12, 1);
        Graph g = spec.realize();
        Coloring c = cc::color_icosahedral(spec, g);
        base_ok = check_coloring(g, c) && c.colors_used() == 4 && co::gamma(g) == 5;
    }
    long total = 0, violations = 0;
    for (uint64_t seed = 0; total < 102; ++seed) {
        auto kind = seed % 3 == 0   ? cg::IcosahedralKind::G0
                    : seed % 3 == 1 ? cg::IcosahedralKind::G1
                                    : cg::IcosahedralKind::G2;
        auto [spec, g] = cg::gen_icosahedral(seed, kind, 2);
        ++total;
        Coloring c = cc::color_icosahedral(spec, g);
        bool ok = check_coloring(g, c) && c.colors_used() <= co::gamma_local(g);
        if (!ok) ++violations;
    }
    std::ostringstream d;
    d << "icosahedron takes exactly 4 colors against gamma 5 ("
      << (base_ok ? "yes" : "NO") << "); proper and <=gamma_local on "
      << (total - violations) << "/" << total << " thickenings";
    return {base_ok && total >= 100 && violations == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 8

Outcome join_extensions() {
    using JK = JoinAnnotation::Kind;
    const JK kinds[] = {JK::CanonicalInterval, JK::Antihat, JK::Strange, JK::PseudoLine,
                        JK::Gear};
    std::ostringstream d;
    bool all_ok = true;
    for (JK kind : kinds) {
        long total = 0, violations = 0;
        for (uint64_t seed = 0; total < 100 && seed < 500; ++seed) {
            Instance inst;
            try {
                inst = cg::gen_strip_composite(seed, kind);
            } catch (const cg::generation_error&) {
                continue;
            }
            const auto& j = *inst.ann.join;
            JoinContext ctx = compute_join_context(inst.g, j);
            int l = kind == JK::PseudoLine ? ctx.gamma_gj : ctx.gamma_lj;
            VertexSet v1 = j.v1(inst.g.n());
            std::vector<int> back;
            Graph g1 = induced(inst.g, v1, nullptr, &back);
            Coloring sub;
            co::chromatic_number(g1, &sub);
            Coloring c1;
            c1.color.assign(inst.g.n(), -1);
            for (int i = 0; i < g1.n(); ++i) c1.color[back[i]] = sub.color[i];
            ++total;
            bool ok = false;
            try {
                Coloring out = cc::extend_join(inst.g, j, c1, l);
                ok = check_coloring(inst.g, out) && out.colors_used() <= l;
                CLAW_FOR_SET(v, v1) ok = ok && out.color[v] == c1.color[v];
                for (int col : out.color) ok = ok && col >= 0 && col < l;
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok) ++violations;
        }
        all_ok = all_ok && total >= 100 && violations == 0;
        d << join_kind_name(kind) << " " << (total - violations) << "/" << total << "; ";
    }
    d << "each at l == its exact threshold, agreeing with c1 on G1";
    return {all_ok, d.str()};
}

// ---------------------------------------------------------------- criterion 9

Outcome bound_chain() {
    long total = 0, violations = 0;
    for (const auto& family : campaign_families()) {
        for (uint64_t seed = 100; seed < 115; ++seed) {
            Instance inst;
            try {
                inst = generate_family(family, seed);
            } catch (const std::exception&) {
                continue;
            }
            if (inst.g.n() > 14) continue;
            ++total;
            co::Rational f = co::fractional_chromatic(inst.g);
            int omega = co::clique_number(inst.g);
            int gl = co::gamma_local(inst.g);
            int gamma = co::gamma(inst.g);
            bool ok = co::Rational(omega) <= f && f <= co::Rational(gl) && gl <= gamma &&
                      gamma <= inst.g.max_degree() + 1;
            if (!ok) ++violations;
        }
    }
    std::ostringstream d;
    d << "omega <= chi_f <= gamma_local <= gamma <= Delta+1 on " << (total - violations)
      << "/" << total << " instances";
    return {total >= 100 && violations == 0, d.str()};
}

// --------------------------------------------------------------- criterion 10

Outcome determinism() {
    fs::path dir1 = fs::temp_directory_path() / "claw_acc_det_a";
    fs::path dir2 = fs::temp_directory_path() / "claw_acc_det_b";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    CampaignConfig cfg;
    cfg.families = {"antihat", "strip-gear", "strip-strange", "icosahedral-G2",
                    "interval-circular"};
    cfg.seed_count = 6;
    cfg.out_dir = dir1.string();
    run_campaign(cfg);
    cfg.out_dir = dir2.string();
    run_campaign(cfg);
    long files = 0, mismatches = 0;
    for (auto& entry : fs::recursive_directory_iterator(dir1)) {
        if (!entry.is_regular_file()) continue;
        ++files;
        fs::path other = dir2 / fs::relative(entry.path(), dir1);
        std::ifstream a(entry.path()), b(other);
        std::string sa((std::istreambuf_iterator<char>(a)), {});
        std::string sb((std::istreambuf_iterator<char>(b)), {});
        if (sa != sb || sa.empty()) ++mismatches;
    }
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    std::ostringstream d;
    d << files - mismatches << "/" << files << " bundle files byte-identical across reruns";
    return {files >= 100 && mismatches == 0, d.str()};
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    report(1, "conjecture bound chi <= gamma at desk scale", conjecture_bound());
    report(2, "local bound on three-cliqued instances", local_bound_three_cliqued());
    report(3, "skeletal reduction soundness", skeletal_reduction_soundness());
    report(4, "alpha<=2 matching colorer optimality", alpha2_optimality());
    report(5, "circular interval round-up property", circular_roundup());
    report(6, "good triad certificates", good_triad_contract());
    report(7, "icosahedral exactness", icosahedral_exactness());
    report(8, "2-join extensions at exact thresholds", join_extensions());
    report(9, "bound chain", bound_chain());
    report(10, "campaign determinism", determinism());
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << secs << "s)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
