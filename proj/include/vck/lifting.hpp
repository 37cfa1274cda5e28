#pragma once

#include <span>

#include "vck/graph.hpp"
#include "vck/record.hpp"

namespace vck {

struct InvalidSolution : Error { using Error::Error; };

bool verify_cover(const Graph& g, const VertexSet& s);

// Cover of `after` -> cover of `before` for one record.
VertexSet lift_step(const Graph& before, const Graph& after, const ModificationRecord& rec, VertexSet cover);

// Walks the trace backwards from the final graph. Throws InvalidSolution if
// `cover` is not a vertex cover of final_graph.
VertexSet lift_solution(const Graph& final_graph, std::span<const ModificationRecord> trace, const VertexSet& cover);

}  // namespace vck
