#pragma once

#include "vck/graph.hpp"

namespace vck {

struct CoverResult {
    std::size_t size = 0;
    VertexSet cover;
};

// Plain exhaustive branching on bitmasks, no reduction rules; at most 64 vertices.
CoverResult brute_force_cover(const Graph& g);
inline std::size_t brute_force_tau(const Graph& g) { return brute_force_cover(g).size; }

// Forward reductions, connected components, branching on a maximum-degree vertex.
CoverResult branch_and_reduce_solve(const Graph& g);

}  // namespace vck
