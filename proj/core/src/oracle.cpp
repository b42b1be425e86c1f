#include "claw/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace claw::oracle {

using boost::multiprecision::cpp_int;

Rational::Rational(cpp_int n, cpp_int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw contract_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    cpp_int g = gcd(abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw contract_error("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
}

long Rational::ceil_long() const {
    cpp_int q = num / den;
    if (num > 0 && num % den != 0) ++q;
    return q.convert_to<long>();
}

std::string Rational::str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::vector<int> Matching::mates(int n) const {
    std::vector<int> mate(n, -1);
    for (auto [u, v] : edges) {
        mate[u] = v;
        mate[v] = u;
    }
    return mate;
}

namespace {

/// Tomita-style max clique: candidates greedily colored, branch on the
/// highest-numbered color first, prune when |R| + color <= best.
struct CliqueSolver {
    const Graph& g;
    int best = 0;
    std::vector<int> best_clique;
    std::vector<int> current;

    explicit CliqueSolver(const Graph& g) : g(g) {}

    void expand(std::vector<int>& cand) {
        // greedy coloring of candidates in order, color = clique bound
        std::vector<int> color(cand.size());
        std::vector<Bitset> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.neighbors(v))) ++c;
            if (c == classes.size()) classes.emplace_back(g.n());
            classes[c].add(v);
            color[i] = int(c) + 1;
        }
        std::vector<size_t> order(cand.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return color[a] < color[b]; });

        std::vector<int> sorted(cand.size());
        std::vector<int> sorted_color(cand.size());
        for (size_t i = 0; i < order.size(); ++i) {
            sorted[i] = cand[order[i]];
            sorted_color[i] = color[order[i]];
        }

        for (int i = int(sorted.size()) - 1; i >= 0; --i) {
            if (int(current.size()) + sorted_color[i] <= best) return;
            int v = sorted[i];
            current.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(v, sorted[j])) next.push_back(sorted[j]);
            if (next.empty()) {
                if (int(current.size()) > best) {
                    best = int(current.size());
                    best_clique = current;
                }
            } else {
                expand(next);
            }
            current.pop_back();
        }
    }
};

} // namespace

int clique_number(const Graph& g, VertexSet* witness) {
    if (g.n() == 0) {
        if (witness) *witness = VertexSet(0);
        return 0;
    }
    CliqueSolver solver(g);
    std::vector<int> cand(g.n());
    std::iota(cand.begin(), cand.end(), 0);
    // degeneracy-ish order helps the bound: sort by degree ascending
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    solver.expand(cand);
    if (witness) *witness = Bitset::of(g.n(), solver.best_clique);
    return solver.best;
}

int max_clique_through(const Graph& g, int v, const VertexSet& allowed) {
    if (!allowed.contains(v)) throw contract_error("max_clique_through: v not allowed");
    Bitset nb = g.neighbors(v) & allowed;
    Graph sub = induced(g, nb);
    return 1 + clique_number(sub);
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

namespace {

struct ChiSolver {
    const Graph& g;
    int n;
    int best;                  // incumbent color count
    std::vector<int> best_col;
    std::vector<int> col;      // current partial coloring, -1 uncolored
    std::vector<Bitset> used_at; // per vertex: colors used by neighbors
    int lower;

    ChiSolver(const Graph& g, int ub, int lb)
        : g(g), n(g.n()), best(ub + 1), col(n, -1), lower(lb) {
        used_at.assign(n, Bitset(ub + 2));
    }

    bool done() const { return best <= lower; }

    void assign(int v, int c, int& used, std::vector<std::pair<int, int>>& log) {
        col[v] = c;
        CLAW_FOR_SET(u, g.neighbors(v)) {
            if (!used_at[u].contains(c)) {
                used_at[u].add(c);
                log.emplace_back(u, c);
            }
        }
        used = std::max(used, c + 1);
    }

    void search(int colored, int used) {
        if (done()) return;
        if (used >= best) return;
        if (colored == n) {
            best = used;
            best_col = col;
            return;
        }
        // DSATUR: max saturation, then max degree, then min index
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (col[v] >= 0) continue;
            int s = used_at[v].count();
            int d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        int cap = std::min(used + 1, best - 1);
        for (int c = 0; c < cap; ++c) {
            if (used_at[pick].contains(c)) continue;
            std::vector<std::pair<int, int>> log;
            int nused = used;
            assign(pick, c, nused, log);
            search(colored + 1, nused);
            col[pick] = -1;
            for (auto [u, cc] : log) used_at[u].remove(cc);
            if (done()) return;
        }
    }
};

} // namespace

int chromatic_number(const Graph& g, Coloring* out) {
    if (g.n() == 0) {
        if (out) out->color.clear();
        return 0;
    }
    VertexSet clique;
    int lb = clique_number(g, &clique);
    // greedy upper bound in degree order
    int ub = 0;
    {
        std::vector<int> order(g.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> gc(g.n(), -1);
        for (int v : order) {
            Bitset taken(g.n() + 1);
            CLAW_FOR_SET(u, g.neighbors(v)) if (gc[u] >= 0) taken.add(gc[u]);
            int c = 0;
            while (taken.contains(c)) ++c;
            gc[v] = c;
            ub = std::max(ub, c + 1);
        }
    }

    ChiSolver solver(g, ub, lb);
    int used = 0;
    std::vector<std::pair<int, int>> log;
    int c = 0;
    CLAW_FOR_SET(v, clique) solver.assign(v, c++, used, log);
    solver.search(clique.count(), used);

    if (out) {
        out->color = solver.best_col;
    }
    return solver.best;
}

int gamma(const Graph& g) {
    if (g.n() == 0) return 0;
    return (g.max_degree() + 1 + clique_number(g) + 1) / 2;
}

int gamma_local_at(const Graph& g, int v) {
    Graph h = induced(g, g.closed_neighborhood(v));
    // Delta of the closed-neighborhood subgraph is d(v)
    return (g.degree(v) + 1 + clique_number(h) + 1) / 2;
}

int gamma_local(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) best = std::max(best, gamma_local_at(g, v));
    return best;
}

} // namespace claw::oracle
