#include "claw/oracle.hpp"

#include <queue>

namespace claw::oracle {

namespace {

/// General-graph maximum matching by repeated augmenting-path search with
/// blossom contraction (base[] tracks contracted blossoms).
struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSolver(const Graph& g) : n(g.n()), adj(g.n()) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).to_vector();
        match.assign(n, -1);
    }

    int lca(int a, int b) {
        std::vector<char> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, false);
        parent.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    in_blossom.assign(n, false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        while (u != -1) {
            int pv = parent[u];
            int next = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = next;
        }
    }

    void solve() {
        // greedy start cuts the number of phases
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to : adj[v]) {
                if (match[to] == -1) {
                    match[v] = to;
                    match[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            if (u != -1) augment(u);
        }
    }
};

} // namespace

Matching max_matching(const Graph& g) {
    BlossomSolver solver(g);
    solver.solve();
    Matching m;
    for (int v = 0; v < g.n(); ++v)
        if (solver.match[v] > v) m.edges.emplace_back(v, solver.match[v]);
    return m;
}

namespace {

void matching_bruteforce(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                         size_t idx, std::vector<char>& taken, int size, Matching& cur,
                         Matching& best) {
    if (size + int(edges.size() - idx) <= best.size()) return;
    if (idx == edges.size()) {
        if (size > best.size()) best = cur;
        return;
    }
    auto [u, v] = edges[idx];
    if (!taken[u] && !taken[v]) {
        taken[u] = taken[v] = true;
        cur.edges.emplace_back(u, v);
        matching_bruteforce(g, edges, idx + 1, taken, size + 1, cur, best);
        cur.edges.pop_back();
        taken[u] = taken[v] = false;
    }
    matching_bruteforce(g, edges, idx + 1, taken, size, cur, best);
}

} // namespace

Matching max_matching_exhaustive(const Graph& g) {
    auto edges = g.edges();
    std::vector<char> taken(g.n(), false);
    Matching cur, best;
    matching_bruteforce(g, edges, 0, taken, 0, cur, best);
    return best;
}

namespace {

struct HopcroftKarp {
    int nl, nr;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match_l, match_r, dist;
    static constexpr int INF = 1 << 29;

    HopcroftKarp(int nl, int nr, const std::vector<std::vector<int>>& adj)
        : nl(nl), nr(nr), adj(adj), match_l(nl, -1), match_r(nr, -1), dist(nl) {}

    bool bfs() {
        std::queue<int> q;
        for (int u = 0; u < nl; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = INF;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    }

    void solve() {
        while (bfs())
            for (int u = 0; u < nl; ++u)
                if (match_l[u] == -1) dfs(u);
    }
};

} // namespace

Matching max_bipartite_matching(int n_left, int n_right,
                                const std::vector<std::vector<int>>& adj) {
    HopcroftKarp hk(n_left, n_right, adj);
    hk.solve();
    Matching m;
    for (int u = 0; u < n_left; ++u)
        if (hk.match_l[u] != -1) m.edges.emplace_back(u, hk.match_l[u]);
    return m;
}

std::pair<std::vector<int>, std::vector<int>>
konig_vertex_cover(int n_left, int n_right, const std::vector<std::vector<int>>& adj,
                   const Matching& matching) {
    std::vector<int> mate_l(n_left, -1), mate_r(n_right, -1);
    for (auto [u, v] : matching.edges) {
        mate_l[u] = v;
        mate_r[v] = u;
    }
    // alternating reachability from unmatched left vertices
    std::vector<char> vis_l(n_left, false), vis_r(n_right, false);
    std::queue<int> q;
    for (int u = 0; u < n_left; ++u)
        if (mate_l[u] == -1) {
            vis_l[u] = true;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (vis_r[v]) continue;
            vis_r[v] = true;
            int w = mate_r[v];
            if (w != -1 && !vis_l[w]) {
                vis_l[w] = true;
                q.push(w);
            }
        }
    }
    std::vector<int> cover_l, cover_r;
    for (int u = 0; u < n_left; ++u)
        if (!vis_l[u]) cover_l.push_back(u);
    for (int v = 0; v < n_right; ++v)
        if (vis_r[v]) cover_r.push_back(v);
    return {cover_l, cover_r};
}

} // namespace claw::oracle
