#include "claw/report.hpp"

#include "claw/detect.hpp"

namespace claw {

BoundReport verify_bounds(const Graph& g, const Coloring* c, const ReportCaps& caps) {
    BoundReport r;
    r.n = g.n();
    r.m = g.m();
    r.max_degree = g.max_degree();
    r.omega = oracle::clique_number(g);
    r.alpha = oracle::independence_number(g);
    r.gamma = oracle::gamma(g);
    r.gamma_local = oracle::gamma_local(g);

    bool claw_free = !detect::find_claw(g).has_value();
    r.verdicts.push_back({"claw_free", claw_free});

    if (g.n() <= caps.chi_cap) {
        r.chi = oracle::chromatic_number(g);
        r.verdicts.push_back({"chi_le_gamma", *r.chi <= r.gamma});
        r.verdicts.push_back({"chi_le_gamma_local", *r.chi <= r.gamma_local});
    }
    if (g.n() <= caps.chi_f_cap) {
        oracle::Rational f = oracle::fractional_chromatic(g, caps.chi_f_cap);
        r.chi_f = f.str();
        bool chain = oracle::Rational(r.omega) <= f && f <= oracle::Rational(r.gamma_local);
        r.verdicts.push_back({"bound_chain", chain});
    }
    if (c) {
        bool proper = check_coloring(g, *c);
        r.colors_used = c->colors_used();
        r.verdicts.push_back({"proper", proper});
        r.verdicts.push_back({"colors_le_gamma", *r.colors_used <= r.gamma});
        if (r.chi) r.verdicts.push_back({"colors_ge_chi", *r.colors_used >= *r.chi});
    }
    return r;
}

} // namespace claw
