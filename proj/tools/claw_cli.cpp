#include "claw/campaign.hpp"
#include "claw/detect.hpp"
#include "claw/dimacs.hpp"
#include "claw/generators.hpp"
#include "claw/json_io.hpp"
#include "claw/reduce.hpp"
#include "claw/struct_color.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace claw;

int cmd_gen(const std::string& family, const std::string& which, uint64_t seed,
            const std::string& out) {
    std::string fam = family;
    if (fam == "icosahedral") fam += "-" + which; // gen --family icosahedral --which G0
    Instance inst = generate_family(fam, seed);
    std::string dir = out.empty() ? fam + "-" + std::to_string(seed) : out;
    write_bundle(dir, inst, nullptr, nullptr);
    std::cout << "bundle " << dir << ": n=" << inst.g.n() << " m=" << inst.g.m() << "\n";
    return 0;
}

/// "5s" or "1500ms" or a plain iteration count for the triad budget.
colorers::ColorOptions parse_budget(const std::string& budget) {
    colorers::ColorOptions opts;
    if (budget.empty()) return opts;
    std::string b = budget;
    long scale = 1;
    if (b.size() > 2 && b.substr(b.size() - 2) == "ms") {
        b = b.substr(0, b.size() - 2);
        scale = 4; // ~4 peels per millisecond at desk scale
    } else if (b.back() == 's') {
        b = b.substr(0, b.size() - 1);
        scale = 4000;
    }
    opts.triad_budget = int(std::stol(b) * scale);
    return opts;
}

int cmd_color(const std::string& graph_path, const std::string& join_path,
              const std::string& out_dir, const std::string& budget) {
    Graph g = read_dimacs_file(graph_path);
    Annotation ann;
    if (!join_path.empty()) ann = annotation_from_json(read_json_file(join_path));
    Coloring c = colorers::color_claw_free(g, ann, parse_budget(budget));
    BoundReport report = verify_bounds(g, &c);
    std::string dir = out_dir.empty() ? "." : out_dir;
    write_json_file(to_json(c), dir + "/coloring.json");
    write_json_file(to_json(report), dir + "/report.json");
    std::cout << "colors=" << c.colors_used() << " gamma=" << report.gamma
              << " gamma_local=" << report.gamma_local << "\n";
    for (const auto& v : report.verdicts)
        std::cout << (v.pass ? "[pass] " : "[FAIL] ") << v.name << "\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_reduce(const std::string& graph_path, const std::string& out_dir) {
    Graph g = read_dimacs_file(graph_path);
    auto [h, trace] = reduce::make_skeletal(g);
    std::string dir = out_dir.empty() ? "." : out_dir;
    write_dimacs_file(h, dir + "/skeletal.col");
    write_json_file(to_json(trace, g.n()), dir + "/trace.json");
    std::cout << "removed " << (g.m() - h.m()) << " edges in " << trace.steps.size()
              << " steps\n";
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = read_dimacs_file(graph_path);
    std::optional<Coloring> c;
    if (!coloring_path.empty()) c = coloring_from_json(read_json_file(coloring_path));
    BoundReport report = verify_bounds(g, c ? &*c : nullptr);
    std::cout << to_json(report).dump(2) << "\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_campaign(const std::vector<std::string>& families, uint64_t seed_begin,
                 uint64_t seeds, const std::string& out_dir, int workers) {
    CampaignConfig cfg;
    cfg.families = families;
    cfg.seed_begin = seed_begin;
    cfg.seed_count = seeds;
    cfg.out_dir = out_dir;
    cfg.workers = workers;
    CampaignSummary s = run_campaign(cfg);
    std::cout << "instances=" << s.instances << " violations=" << s.violations
              << " generator_failures=" << s.generator_failures
              << " colorer_failures=" << s.colorer_failures;
    if (s.worst_slack >= 0) std::cout << " worst_slack=" << s.worst_slack;
    std::cout << "\n";
    for (const auto& note : s.notes) std::cout << "  " << note << "\n";
    return s.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free coloring pipeline"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate an instance bundle");
    std::string family, which = "G0", gen_out;
    uint64_t seed = 0;
    gen->add_option("--family", family, "generator family")->required();
    gen->add_option("--which", which, "icosahedral base: G0, G1 or G2");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", gen_out, "output directory");

    auto* color = app.add_subcommand("color", "color a graph and audit the bounds");
    std::string graph_path, join_path, color_out, budget;
    color->add_option("graph", graph_path, "DIMACS .col file")->required();
    color->add_option("--join", join_path, "annotation.json with structure hints");
    color->add_option("--out", color_out, "output directory");
    color->add_option("--budget", budget, "peeling budget (count, Ns or Nms)");

    auto* red = app.add_subcommand("reduce", "skeletal reduction with a replay trace");
    std::string red_graph, red_out;
    red->add_option("graph", red_graph, "DIMACS .col file")->required();
    red->add_option("--out", red_out, "output directory");

    auto* verify = app.add_subcommand("verify", "recompute bounds and audit a coloring");
    std::string v_graph, v_coloring;
    verify->add_option("graph", v_graph, "DIMACS .col file")->required();
    verify->add_option("coloring", v_coloring, "coloring.json");

    auto* camp = app.add_subcommand("campaign", "generate + color + verify across seeds");
    std::vector<std::string> families;
    uint64_t seed_begin = 0, seeds = 10;
    std::string camp_out;
    int workers = 0;
    camp->add_option("--family", families, "families (default: all)");
    camp->add_option("--seed-begin", seed_begin, "first seed");
    camp->add_option("--seeds", seeds, "number of seeds per family");
    camp->add_option("--out", camp_out, "bundle output directory");
    camp->add_option("--workers", workers, "worker threads (or CLAW_WORKERS)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, which, seed, gen_out);
        if (color->parsed()) return cmd_color(graph_path, join_path, color_out, budget);
        if (red->parsed()) return cmd_reduce(red_graph, red_out);
        if (verify->parsed()) return cmd_verify(v_graph, v_coloring);
        if (camp->parsed()) return cmd_campaign(families, seed_begin, seeds, camp_out, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
