#include "claw/campaign.hpp"

#include "claw/dimacs.hpp"
#include "claw/generators.hpp"
#include "claw/json_io.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <thread>

namespace claw {

namespace fs = std::filesystem;

std::vector<std::string> campaign_families() {
    return {"line-graph",   "interval-linear", "interval-circular", "thickening",
            "icosahedral-G0", "icosahedral-G1", "icosahedral-G2",   "antihat",
            "hex-join",     "strip-canonical", "strip-antihat",     "strip-strange",
            "strip-pseudo-line", "strip-gear"};
}

namespace {

Instance icosahedral_instance(gen::IcosahedralKind kind, uint64_t seed, int cap) {
    // multiplicity 2 when it fits the oracle envelope, otherwise all ones
    auto [spec, g] = gen::gen_icosahedral(seed, kind, 2);
    if (g.n() > cap) std::tie(spec, g) = gen::gen_icosahedral(seed, kind, 1);
    Instance inst;
    inst.g = std::move(g);
    inst.ann.thickening = std::move(spec);
    return inst;
}

Instance strip_instance(JoinAnnotation::Kind kind, uint64_t seed, int cap) {
    gen::StripCompositeParams p;
    p.host_n = 5;
    p.x1_size = 1 + int(seed % 2);
    p.y1_size = 1;
    p.strip_extra = 2;
    p.max_mult = 1;
    if (kind == JoinAnnotation::Kind::CanonicalInterval) p.max_mult = 2;
    Instance inst = gen::gen_strip_composite(seed, kind, p);
    if (inst.g.n() > cap) {
        p.max_mult = 1;
        p.host_n = 4;
        p.x1_size = 1;
        inst = gen::gen_strip_composite(seed, kind, p);
    }
    return inst;
}

} // namespace

Instance generate_family(const std::string& family, uint64_t seed) {
    const int cap = 18; // keep the chi oracle available across the campaign
    gen::Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    if (family == "line-graph") {
        return gen::gen_line_graph(seed, 4 + rng.below(2), 5 + rng.below(5));
    }
    if (family == "interval-linear")
        return gen::gen_interval(seed, 6 + rng.below(9), IntervalRepresentation::Kind::Linear);
    if (family == "interval-circular")
        return gen::gen_interval(seed, 6 + rng.below(9),
                                 IntervalRepresentation::Kind::Circular);
    if (family == "thickening") {
        int base_n = 5 + rng.below(3);
        bool cycle = rng.chance(0.5);
        Graph base(base_n);
        for (int i = 0; i + 1 < base_n; ++i) base.add_edge(i, i + 1);
        if (cycle) base.add_edge(0, base_n - 1);
        auto [spec, g] = gen::gen_thickening(seed, base, ThickeningSpec::Family::Generic, 2, 0.6);
        if (g.n() > cap) std::tie(spec, g) = gen::gen_thickening(seed, base,
                                                                 ThickeningSpec::Family::Generic,
                                                                 1, 0.0);
        Instance inst;
        inst.g = std::move(g);
        inst.ann.thickening = std::move(spec);
        return inst;
    }
    if (family == "icosahedral-G0") return icosahedral_instance(gen::IcosahedralKind::G0, seed, cap);
    if (family == "icosahedral-G1") return icosahedral_instance(gen::IcosahedralKind::G1, seed, cap);
    if (family == "icosahedral-G2") return icosahedral_instance(gen::IcosahedralKind::G2, seed, cap);
    if (family == "antihat") {
        gen::AntihatParams p;
        p.k = 2;
        p.max_mult = 2;
        auto inst = gen::gen_antihat(seed, p);
        if (inst.g.n() > cap) {
            p.max_mult = 1;
            inst = gen::gen_antihat(seed, p);
        }
        Instance out;
        out.g = std::move(inst.g);
        out.ann.thickening = std::move(inst.spec);
        out.ann.three_cliques = std::move(inst.cliques);
        return out;
    }
    if (family == "hex-join") {
        for (uint64_t bump = 0;; ++bump) {
            Instance inst = gen::gen_hex_join(seed + (bump << 32));
            if (inst.g.n() <= cap) return inst;
            if (bump > 16) return inst;
        }
    }
    if (family == "strip-canonical")
        return strip_instance(JoinAnnotation::Kind::CanonicalInterval, seed, cap + 4);
    if (family == "strip-antihat")
        return strip_instance(JoinAnnotation::Kind::Antihat, seed, cap + 4);
    if (family == "strip-strange")
        return strip_instance(JoinAnnotation::Kind::Strange, seed, cap + 4);
    if (family == "strip-pseudo-line")
        return strip_instance(JoinAnnotation::Kind::PseudoLine, seed, cap + 4);
    if (family == "strip-gear") return strip_instance(JoinAnnotation::Kind::Gear, seed, cap + 4);
    throw contract_error("unknown generator family: " + family);
}

void write_bundle(const std::string& dir, const Instance& inst, const Coloring* coloring,
                  const BoundReport* report) {
    fs::create_directories(dir);
    write_dimacs_file(inst.g, dir + "/graph.col");
    write_json_file(to_json(inst.ann, inst.g.n()), dir + "/annotation.json");
    if (coloring) write_json_file(to_json(*coloring), dir + "/coloring.json");
    if (report) write_json_file(to_json(*report), dir + "/report.json");
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
    std::vector<std::string> families =
        cfg.families.empty() ? campaign_families() : cfg.families;
    struct Task {
        std::string family;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const auto& fam : families)
        for (uint64_t s = 0; s < cfg.seed_count; ++s)
            tasks.push_back({fam, cfg.seed_begin + s});

    int workers = cfg.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("CLAW_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = 1;
    }

    CampaignSummary summary;
    std::mutex mu;
    std::atomic<size_t> next{0};

    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            std::string dir;
            if (!cfg.out_dir.empty())
                dir = cfg.out_dir + "/" + task.family + "/" + std::to_string(task.seed);

            Instance inst;
            try {
                inst = generate_family(task.family, task.seed);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mu);
                ++summary.generator_failures;
                summary.notes.push_back(task.family + "/" + std::to_string(task.seed) +
                                        ": generator: " + e.what());
                continue;
            }

            bool colored = true;
            Coloring c;
            try {
                c = colorers::color_claw_free(inst.g, inst.ann, cfg.color_opts);
            } catch (const std::exception& e) {
                colored = false;
                std::lock_guard<std::mutex> lock(mu);
                ++summary.colorer_failures;
                summary.notes.push_back(task.family + "/" + std::to_string(task.seed) +
                                        ": colorer: " + e.what());
            }

            BoundReport report = verify_bounds(inst.g, colored ? &c : nullptr, cfg.caps);
            bool violated = !report.all_pass();

            std::lock_guard<std::mutex> lock(mu);
            ++summary.instances;
            if (report.chi) {
                int slack = report.gamma - *report.chi;
                if (summary.worst_slack < 0 || slack < summary.worst_slack)
                    summary.worst_slack = slack;
            }
            if (violated) {
                ++summary.violations;
                summary.notes.push_back(task.family + "/" + std::to_string(task.seed) +
                                        ": verdict failure");
            }
            if (!dir.empty()) {
                write_bundle(dir, inst, colored ? &c : nullptr, &report);
                if (violated) {
                    std::string vdir = cfg.out_dir + "/violations/" + task.family + "-" +
                                       std::to_string(task.seed);
                    write_bundle(vdir, inst, colored ? &c : nullptr, &report);
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return summary;
}

} // namespace claw
