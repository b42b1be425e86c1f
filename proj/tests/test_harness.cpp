#include "doctest.h"
#include "test_util.hpp"

#include "claw/campaign.hpp"
#include "claw/dimacs.hpp"
#include "claw/generators.hpp"
#include "claw/json_io.hpp"
#include "claw/oracle.hpp"
#include "claw/reduce.hpp"

#include <filesystem>
#include <fstream>

using namespace claw;
using namespace test_util;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("verify_bounds on the icosahedron and its 4-coloring") {
    Graph ico = icosahedron();
    Coloring c;
    oracle::chromatic_number(ico, &c);
    BoundReport r = verify_bounds(ico, &c);
    CHECK(r.omega == 3);
    CHECK(r.alpha == 3);
    CHECK(r.gamma == 5);
    CHECK(r.gamma_local == 5);
    REQUIRE(r.chi.has_value());
    CHECK(*r.chi == 4);
    CHECK(*r.verdict("chi_le_gamma"));
    CHECK(*r.verdict("proper"));
    CHECK(r.all_pass());
}

TEST_CASE("verify_bounds on C5 and a corrupted coloring") {
    Graph c5 = cycle_graph(5);
    BoundReport r = verify_bounds(c5);
    CHECK(*r.chi == 3);
    CHECK(r.gamma == 3);
    CHECK(r.all_pass());
    Coloring bad{{0, 0, 1, 0, 1}};
    BoundReport rb = verify_bounds(c5, &bad);
    CHECK(!*rb.verdict("proper"));
    CHECK(!rb.all_pass());
}

TEST_CASE("out-of-cap quantities stay absent") {
    std::mt19937_64 rng(4);
    Graph g = random_graph(rng, 17, 0.3);
    ReportCaps caps;
    caps.chi_cap = 16;
    caps.chi_f_cap = 12;
    BoundReport r = verify_bounds(g, nullptr, caps);
    CHECK(!r.chi.has_value());
    CHECK(!r.chi_f.has_value());
}

TEST_CASE("annotation json round trip") {
    Instance inst = gen::gen_strip_composite(3, JoinAnnotation::Kind::Gear);
    json j = to_json(inst.ann, inst.g.n());
    Annotation back = annotation_from_json(j);
    REQUIRE(back.join.has_value());
    CHECK(back.join->kind == inst.ann.join->kind);
    CHECK(back.join->x1 == inst.ann.join->x1);
    CHECK(back.join->strip_labels == inst.ann.join->strip_labels);
    CHECK(to_json(back, inst.g.n()) == j);

    auto [spec, g] = gen::gen_icosahedral(5, gen::IcosahedralKind::G2, 2);
    Annotation a;
    a.thickening = spec;
    Annotation b = annotation_from_json(to_json(a, g.n()));
    REQUIRE(b.thickening.has_value());
    CHECK(b.thickening->realize() == spec.realize());
}

TEST_CASE("coloring and trace json round trips") {
    Coloring c{{0, 1, 2, 0, 1}};
    CHECK(coloring_from_json(to_json(c)).color == c.color);

    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto [h, trace] = reduce::make_skeletal(g);
    json j = to_json(trace, g.n());
    reduce::ReductionTrace back = trace_from_json(j, g.n());
    REQUIRE(back.steps.size() == trace.steps.size());
    CHECK(back.steps[0].removed_edges == trace.steps[0].removed_edges);
    CHECK(back.steps[0].kept_clique == trace.steps[0].kept_clique);
}

TEST_CASE("campaign: icosahedral seeds produce zero violations") {
    CampaignConfig cfg;
    cfg.families = {"icosahedral-G0"};
    cfg.seed_count = 10;
    CampaignSummary s = run_campaign(cfg);
    CHECK(s.instances == 10);
    CHECK(s.violations == 0);
    CHECK(s.colorer_failures == 0);
    CHECK(s.worst_slack >= 0);
}

TEST_CASE("campaign: empty family list means every family") {
    CampaignConfig cfg;
    cfg.seed_count = 1;
    CampaignSummary s = run_campaign(cfg);
    CHECK(s.instances == long(campaign_families().size()));
    CHECK(s.violations == 0);
}

TEST_CASE("campaign bundles are byte-identical across reruns") {
    fs::path dir1 = fs::temp_directory_path() / "claw_camp_a";
    fs::path dir2 = fs::temp_directory_path() / "claw_camp_b";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    CampaignConfig cfg;
    cfg.families = {"antihat", "strip-gear", "interval-circular"};
    cfg.seed_count = 4;
    cfg.workers = 2; // byte-identical regardless of the pool size
    cfg.out_dir = dir1.string();
    run_campaign(cfg);
    cfg.out_dir = dir2.string();
    run_campaign(cfg);
    int compared = 0;
    for (auto& entry : fs::recursive_directory_iterator(dir1)) {
        if (!entry.is_regular_file()) continue;
        fs::path rel = fs::relative(entry.path(), dir1);
        CHECK(slurp(entry.path()) == slurp(dir2 / rel));
        ++compared;
    }
    CHECK(compared >= 3 * 4 * 4);
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("persisted bundles re-verify identically") {
    fs::path dir = fs::temp_directory_path() / "claw_camp_c";
    fs::remove_all(dir);
    CampaignConfig cfg;
    cfg.families = {"hex-join"};
    cfg.seed_count = 3;
    cfg.out_dir = dir.string();
    run_campaign(cfg);
    for (uint64_t seed = 0; seed < 3; ++seed) {
        fs::path bundle = dir / "hex-join" / std::to_string(seed);
        Graph g = read_dimacs_file((bundle / "graph.col").string());
        Coloring c = coloring_from_json(read_json_file((bundle / "coloring.json").string()));
        BoundReport fresh = verify_bounds(g, &c);
        json persisted = read_json_file((bundle / "report.json").string());
        CHECK(to_json(fresh) == persisted);
    }
    fs::remove_all(dir);
}
