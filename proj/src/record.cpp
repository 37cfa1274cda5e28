#include "vck/record.hpp"

#include <algorithm>
#include <map>

namespace vck {

VertexList ModificationRecord::touched() const {
    return set_union(set_union(removed_vertices, added_vertices), boundary);
}

ModificationRecord record_from_journal(const Graph& after, const std::vector<Graph::Change>& journal) {
    VertexSet added, removed;
    std::map<Edge, bool> before;  // edge -> present before the journal
    for (const auto& c : journal) {
        switch (c.op) {
            case Graph::Op::AddVertex: added.insert(c.u); break;
            case Graph::Op::RemoveVertex:
                if (!added.count(c.u)) removed.insert(c.u);
                break;
            case Graph::Op::AddEdge: before.emplace(Edge(c.u, c.v), false); break;
            case Graph::Op::RemoveEdge: before.emplace(Edge(c.u, c.v), true); break;
        }
    }
    ModificationRecord r;
    for (VertexId v : added)
        if (after.contains(v)) r.added_vertices.push_back(v);
    r.removed_vertices.assign(removed.begin(), removed.end());
    VertexSet boundary;
    auto pre_existing_live = [&](VertexId x) { return !added.count(x) && after.contains(x); };
    for (const auto& [e, was] : before) {
        bool now = after.contains(e.u) && after.contains(e.v) && after.has_edge(e.u, e.v);
        if (was == now) continue;
        (was ? r.removed_edges : r.added_edges).push_back(e);
        if (pre_existing_live(e.u)) boundary.insert(e.u);
        if (pre_existing_live(e.v)) boundary.insert(e.v);
    }
    r.boundary.assign(boundary.begin(), boundary.end());
    return r;
}

void replay(Graph& g, const ModificationRecord& r) {
    for (const Edge& e : r.removed_edges)
        if (g.contains(e.u) && g.contains(e.v)) g.remove_edge(e.u, e.v);
    for (VertexId v : r.removed_vertices) g.remove_vertex(v);
    for (VertexId v : r.added_vertices) g.add_vertex_with_id(v);
    for (const Edge& e : r.added_edges) g.add_edge(e.u, e.v);
}

void replay(Instance& inst, const ModificationRecord& r) {
    replay(inst.graph, r);
    inst.k += r.delta_k;
}

void unreplay(Graph& g, const ModificationRecord& r) {
    for (const Edge& e : r.added_edges) g.remove_edge(e.u, e.v);
    for (VertexId v : r.added_vertices) g.remove_vertex(v);
    for (VertexId v : r.removed_vertices) g.revive_vertex(v);
    for (const Edge& e : r.removed_edges) g.add_edge(e.u, e.v);
}

}  // namespace vck
