#pragma once

#include <optional>
#include <vector>

#include "vck/graph.hpp"
#include "vck/rules.hpp"

namespace vck {

enum class Direction : std::uint8_t { Forward, Backward };

struct ModificationRecord {
    std::size_t step = 0;
    Rule rule = Rule::Deg0;
    Direction direction = Direction::Forward;
    VertexList boundary;
    VertexList removed_vertices;
    std::vector<Edge> removed_edges;
    VertexList added_vertices;
    std::vector<Edge> added_edges;
    std::int64_t delta_k = 0;
    Site site;                           // the applied site
    std::vector<VertexList> created;     // rule specific output ids (merged vertex, W-vertices, ...)
    std::optional<Site> restore;         // backward records: forward site undoing this one
    bool converse = false;               // inverse of a forward record, see Engine::apply_converse

    // vertices of H and H' : removed, added and boundary
    VertexList touched() const;
    bool operator==(const ModificationRecord&) const = default;
};

using Trace = std::vector<ModificationRecord>;

// Net effect of a journal, relative to the graph state when the journal began.
ModificationRecord record_from_journal(const Graph& after, const std::vector<Graph::Change>& journal);

void replay(Graph& g, const ModificationRecord& r);
void replay(Instance& inst, const ModificationRecord& r);
// inverse of replay; revives removed ids
void unreplay(Graph& g, const ModificationRecord& r);

}  // namespace vck
