#ifndef CLAW_REPORT_HPP
#define CLAW_REPORT_HPP

#include "claw/graph.hpp"
#include "claw/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace claw {

/// Exact quantities and named verdicts for one instance. Out-of-cap fields
/// stay absent rather than guessed.
struct BoundReport {
    int n = 0, m = 0, max_degree = 0, omega = 0, alpha = 0;
    int gamma = 0, gamma_local = 0;
    std::optional<int> chi;
    std::optional<std::string> chi_f; // exact rational, as "p/q"
    std::optional<int> colors_used;

    struct Verdict {
        std::string name;
        bool pass;
    };
    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
    std::optional<bool> verdict(const std::string& name) const {
        for (const auto& v : verdicts)
            if (v.name == name) return v.pass;
        return std::nullopt;
    }
};

struct ReportCaps {
    int chi_cap = 20;
    int chi_f_cap = 16;
};

/// Computes every in-cap quantity; audits the coloring when given. Verdicts:
/// claw_free, chi_le_gamma, chi_le_gamma_local (when chi known), proper and
/// colors_le_gamma (when a coloring is given).
BoundReport verify_bounds(const Graph& g, const Coloring* c = nullptr,
                          const ReportCaps& caps = {});

} // namespace claw

#endif
