#include "claw/oracle.hpp"

#include <algorithm>

namespace claw::oracle {

namespace {

/// All maximal cliques (Bron-Kerbosch with pivoting).
void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x,
                   std::vector<Bitset>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    Bitset px = p | x;
    int pivot = -1, best = -1;
    CLAW_FOR_SET(u, px) {
        int c = p.count_and(g.neighbors(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bitset cand = p - g.neighbors(pivot);
    CLAW_FOR_SET(v, cand) {
        Bitset r2 = r;
        r2.add(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
        p.remove(v);
        x.add(v);
    }
}

std::vector<Bitset> maximal_stable_sets(const Graph& g) {
    Graph co = complement(g);
    std::vector<Bitset> out;
    Bitset p(g.n());
    p.fill();
    bron_kerbosch(co, Bitset(g.n()), p, Bitset(g.n()), out);
    return out;
}

/// Dense exact-rational simplex tableau for: minimize c.x, A x = b, x >= 0.
/// Bland's rule throughout; deterministic.
struct Simplex {
    int rows, cols;
    std::vector<std::vector<Rational>> a; // rows x cols
    std::vector<Rational> b;              // rows
    std::vector<int> basis;               // basic variable per row

    Rational solve(const std::vector<Rational>& cost, const std::vector<char>& banned) {
        while (true) {
            // reduced costs via basis cost vector: z_j - c_j computed directly
            // y = c_B B^-1 is implicit: tableau is kept in canonical form,
            // so reduced cost of column j is c_j - sum_i c_basis[i] * a[i][j].
            int enter = -1;
            for (int j = 0; j < cols; ++j) {
                if (banned[j]) continue;
                Rational rc = cost[j];
                for (int i = 0; i < rows; ++i)
                    if (!(a[i][j].num == 0)) rc = rc - cost[basis[i]] * a[i][j];
                if (rc < Rational(0)) {
                    enter = j;
                    break; // Bland: first improving column
                }
            }
            if (enter < 0) break;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < rows; ++i) {
                if (a[i][enter] > Rational(0)) {
                    Rational ratio = b[i] / a[i][enter];
                    if (leave < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) throw contract_error("simplex: unbounded");
            pivot(leave, enter);
        }
        Rational val(0);
        for (int i = 0; i < rows; ++i) val = val + cost[basis[i]] * b[i];
        return val;
    }

    void pivot(int pr, int pc) {
        Rational pv = a[pr][pc];
        for (int j = 0; j < cols; ++j) a[pr][j] = a[pr][j] / pv;
        b[pr] = b[pr] / pv;
        for (int i = 0; i < rows; ++i) {
            if (i == pr || a[i][pc].num == 0) continue;
            Rational f = a[i][pc];
            for (int j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[pr][j];
            b[i] = b[i] - f * b[pr];
        }
        basis[pr] = pc;
    }
};

} // namespace

Rational fractional_chromatic(const Graph& g, int cap) {
    if (g.n() > cap)
        throw contract_error("fractional_chromatic: instance too large (n=" +
                             std::to_string(g.n()) + ", cap=" + std::to_string(cap) + ")");
    if (g.n() == 0) return Rational(0);

    std::vector<Bitset> sets = maximal_stable_sets(g);
    int n = g.n();
    int ns = int(sets.size());
    // columns: [sets | surplus | artificial]
    int cols = ns + n + n;
    Simplex sx;
    sx.rows = n;
    sx.cols = cols;
    sx.a.assign(n, std::vector<Rational>(cols, Rational(0)));
    sx.b.assign(n, Rational(1));
    sx.basis.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < ns; ++j)
            if (sets[j].contains(v)) sx.a[v][j] = Rational(1);
        sx.a[v][ns + v] = Rational(-1);     // surplus
        sx.a[v][ns + n + v] = Rational(1);  // artificial
        sx.basis[v] = ns + n + v;
    }

    // phase 1: drive artificials to zero
    std::vector<Rational> cost1(cols, Rational(0));
    for (int v = 0; v < n; ++v) cost1[ns + n + v] = Rational(1);
    std::vector<char> banned(cols, 0);
    Rational p1 = sx.solve(cost1, banned);
    if (p1 != Rational(0))
        throw contract_error("fractional_chromatic: covering LP infeasible");

    // pivot leftover artificials out of the basis; all-zero rows are redundant
    for (int i = 0; i < n; ++i) {
        if (sx.basis[i] >= ns + n) {
            for (int j = 0; j < ns + n; ++j) {
                if (sx.a[i][j].num != 0) {
                    sx.pivot(i, j);
                    break;
                }
            }
        }
    }

    // phase 2: forbid artificials, minimize total weight on stable sets
    for (int v = 0; v < n; ++v) banned[ns + n + v] = 1;
    std::vector<Rational> cost2(cols, Rational(0));
    for (int j = 0; j < ns; ++j) cost2[j] = Rational(1);
    return sx.solve(cost2, banned);
}

} // namespace claw::oracle
