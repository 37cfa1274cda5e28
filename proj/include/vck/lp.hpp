#pragma once

#include <map>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Hopcroft-Karp on a bipartite graph with left vertices 0..nl-1 and right 0..nr-1.
class HopcroftKarp {
public:
    HopcroftKarp(std::size_t nl, std::size_t nr) : adj_(nl), match_l_(nl, -1), match_r_(nr, -1) {}
    void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(static_cast<int>(r)); }
    std::size_t solve();
    int match_left(std::size_t l) const { return match_l_[l]; }
    int match_right(std::size_t r) const { return match_r_[r]; }
    const std::vector<int>& neighbors(std::size_t l) const { return adj_[l]; }

private:
    bool bfs();
    bool dfs(int l);
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, dist_;
};

// Half-integral optimum of the vertex cover LP, values stored doubled (0, 1, 2).
struct LpSolution {
    std::map<VertexId, int> x2;
    VertexList v0, v1, half;
    std::int64_t objective2 = 0;  // twice the LP objective
};

// Optimal half-integral solution with the fewest 1/2 entries.
LpSolution solve_lp_extreme(const Graph& g);

}  // namespace vck
