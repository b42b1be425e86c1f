#ifndef CLAW_CAMPAIGN_HPP
#define CLAW_CAMPAIGN_HPP

#include "claw/instance.hpp"
#include "claw/report.hpp"
#include "claw/struct_color.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace claw {

/// Generator family names accepted by the campaign and the CLI gen command.
std::vector<std::string> campaign_families();

/// Deterministic instance for (family, seed), sized for the exact oracles.
Instance generate_family(const std::string& family, uint64_t seed);

struct CampaignConfig {
    std::vector<std::string> families; // empty means every family
    uint64_t seed_begin = 0;
    uint64_t seed_count = 10;
    ReportCaps caps;
    colorers::ColorOptions color_opts;
    std::string out_dir;  // empty: keep everything in memory
    int workers = 0;      // 0: CLAW_WORKERS env or 1
};

struct CampaignSummary {
    long instances = 0;
    long violations = 0;
    long generator_failures = 0;
    long colorer_failures = 0;
    int worst_slack = -1; // min over instances of gamma - chi; -1 if none seen
    std::vector<std::string> notes;

    bool ok() const { return violations == 0 && colorer_failures == 0; }
};

/// Generate, color, verify and (optionally) persist one bundle per seed per
/// family. Violating bundles are copied under out_dir/violations/.
CampaignSummary run_campaign(const CampaignConfig& cfg);

/// Writes graph.col, annotation.json, coloring.json and report.json.
void write_bundle(const std::string& dir, const Instance& inst, const Coloring* coloring,
                  const BoundReport* report);

} // namespace claw

#endif
