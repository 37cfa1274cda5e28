#include "vck/lp.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace vck {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

bool HopcroftKarp::bfs() {
    std::queue<int> q;
    dist_.assign(adj_.size(), kInf);
    for (std::size_t l = 0; l < adj_.size(); ++l)
        if (match_l_[l] < 0) {
            dist_[l] = 0;
            q.push(static_cast<int>(l));
        }
    bool found = false;
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : adj_[l]) {
            int l2 = match_r_[r];
            if (l2 < 0) found = true;
            else if (dist_[l2] == kInf) {
                dist_[l2] = dist_[l] + 1;
                q.push(l2);
            }
        }
    }
    return found;
}

bool HopcroftKarp::dfs(int l) {
    for (int r : adj_[l]) {
        int l2 = match_r_[r];
        if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
            match_l_[l] = r;
            match_r_[r] = l;
            return true;
        }
    }
    dist_[l] = kInf;
    return false;
}

std::size_t HopcroftKarp::solve() {
    std::size_t size = 0;
    while (bfs())
        for (std::size_t l = 0; l < adj_.size(); ++l)
            if (match_l_[l] < 0 && dfs(static_cast<int>(l))) ++size;
    return size;
}

namespace {

// Tarjan, iterative; components numbered in completion order (sinks first).
std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on(n, 0);
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

}  // namespace

LpSolution solve_lp_extreme(const Graph& g) {
    VertexList ids = g.vertex_list();
    std::size_t n = ids.size();
    auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    HopcroftKarp hk(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(ids[i])) hk.add_edge(i, index_of(w));
    hk.solve();

    // residual graph of the symmetric flow (M + mirror(M)) / 2; nodes L_i = i, R_i = n + i, s, t
    int s = static_cast<int>(2 * n), t = s + 1;
    std::vector<std::vector<int>> adj(2 * n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        int deg = (hk.match_left(i) >= 0) + (hk.match_right(i) >= 0);
        int li = static_cast<int>(i), ri = static_cast<int>(n + i);
        if (deg < 2) {
            adj[s].push_back(li);
            adj[ri].push_back(t);
        }
        if (deg > 0) {
            adj[li].push_back(s);
            adj[t].push_back(ri);
        }
        for (int w : hk.neighbors(i)) {
            adj[li].push_back(static_cast<int>(n) + w);
            if (hk.match_left(i) == w || hk.match_left(static_cast<std::size_t>(w)) == li)
                adj[static_cast<int>(n) + w].push_back(li);
        }
    }
    adj[t].push_back(s);
    std::vector<int> comp = scc(adj);

    LpSolution sol;
    for (std::size_t i = 0; i < n; ++i) {
        int cl = comp[i], cr = comp[n + i];
        bool l_in = cl < cr, r_in = cr < cl;  // in the source side S
        int x2 = (l_in ? 0 : 1) + (r_in ? 1 : 0);
        sol.x2[ids[i]] = x2;
        sol.objective2 += x2;
        (x2 == 0 ? sol.v0 : x2 == 2 ? sol.v1 : sol.half).push_back(ids[i]);
    }
    return sol;
}

}  // namespace vck
