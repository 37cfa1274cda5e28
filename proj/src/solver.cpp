#include "vck/solver.hpp"

#include <algorithm>
#include <bit>

#include "vck/engine.hpp"
#include "vck/lifting.hpp"

namespace vck {

namespace {

struct Bitmask {
    std::vector<std::uint64_t> adj;
    std::uint64_t best_mask = 0;
    int best = 0;

    void run(std::uint64_t alive, std::uint64_t chosen, int cost) {
        if (cost >= best) return;
        int vmax = -1, dmax = 0, edges2 = 0;
        for (std::uint64_t r = alive; r; r &= r - 1) {
            int v = std::countr_zero(r);
            int d = std::popcount(adj[v] & alive);
            edges2 += d;
            if (d == 1) {
                // a leaf: its neighbour is always safe to take
                int u = std::countr_zero(adj[v] & alive);
                run(alive & ~(1ULL << u) & ~(1ULL << v), chosen | (1ULL << u), cost + 1);
                return;
            }
            if (d > dmax) dmax = d, vmax = v;
        }
        if (vmax < 0) {
            best = cost;
            best_mask = chosen;
            return;
        }
        int m = edges2 / 2;
        if (cost + (m + dmax - 1) / dmax >= best) return;
        std::uint64_t nb = adj[vmax] & alive;
        run(alive & ~(1ULL << vmax), chosen | (1ULL << vmax), cost + 1);
        run(alive & ~nb & ~(1ULL << vmax), chosen | nb, cost + std::popcount(nb));
    }
};

}  // namespace

CoverResult brute_force_cover(const Graph& g) {
    if (g.num_vertices() > 64) throw InvalidArgument("brute_force_cover supports at most 64 vertices");
    VertexList ids = g.vertex_list();
    Bitmask b;
    b.adj.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (VertexId y : g.neighbors(ids[i])) {
            auto j = std::lower_bound(ids.begin(), ids.end(), y) - ids.begin();
            b.adj[i] |= 1ULL << j;
        }
    std::uint64_t all = ids.size() == 64 ? ~0ULL : (1ULL << ids.size()) - 1;
    b.best = static_cast<int>(ids.size()) + 1;
    b.run(all, 0, 0);
    CoverResult out;
    out.size = static_cast<std::size_t>(b.best);
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (b.best_mask >> i & 1) out.cover.insert(ids[i]);
    return out;
}

namespace {

std::vector<VertexList> components(const Graph& g) {
    std::vector<VertexList> out;
    VertexSet seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        VertexList comp{s}, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : g.neighbors(x))
                if (seen.insert(y).second) comp.push_back(y), stack.push_back(y);
        }
        out.push_back(sorted(std::move(comp)));
    }
    return out;
}

VertexSet solve_rec(const Graph& g) {
    static const Rule kRules[] = {Rule::Deg0, Rule::Deg1, Rule::Deg2Fold, Rule::Dom, Rule::LP};
    Engine e(Instance{g, 0, Mode::Counting});
    e.reduce_in_order(kRules);
    const Graph& kernel = e.graph();
    VertexSet cover;
    if (kernel.num_vertices() <= 24) {
        cover = brute_force_cover(kernel).cover;
    } else {
        auto comps = components(kernel);
        if (comps.size() > 1) {
            for (const auto& c : comps)
                for (VertexId x : solve_rec(kernel.induced_subgraph(c))) cover.insert(x);
        } else {
            VertexId v = kernel.max_degree_vertex();
            VertexList without_v = set_difference(kernel.vertex_list(), {v});
            VertexSet a = solve_rec(kernel.induced_subgraph(without_v));
            a.insert(v);
            VertexList nv = kernel.closed_neighborhood(v);
            VertexSet b;
            if (a.size() > nv.size() - 1) {
                b = solve_rec(kernel.induced_subgraph(set_difference(kernel.vertex_list(), nv)));
                for (VertexId x : kernel.neighbors(v)) b.insert(x);
            }
            cover = (!b.empty() && b.size() < a.size()) ? std::move(b) : std::move(a);
        }
    }
    return lift_solution(kernel, e.trace(), cover);
}

}  // namespace

CoverResult branch_and_reduce_solve(const Graph& g) {
    CoverResult out;
    out.cover = solve_rec(g);
    out.size = out.cover.size();
    return out;
}

}  // namespace vck
