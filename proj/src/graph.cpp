#include "vck/graph.hpp"

#include <algorithm>

namespace vck {

Graph::Graph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex();
}

void Graph::check(VertexId v) const {
    if (!contains(v)) throw InvalidVertex("invalid vertex " + std::to_string(v));
}

VertexId Graph::add_vertex() {
    VertexId id = next_id();
    adj_.emplace_back();
    alive_.push_back(1);
    live_.insert(id);
    log(Op::AddVertex, id);
    return id;
}

void Graph::add_vertex_with_id(VertexId id) {
    if (id < next_id()) throw InvalidVertex("vertex id already allocated: " + std::to_string(id));
    adj_.resize(id + 1);
    alive_.resize(id + 1, 0);
    alive_[id] = 1;
    live_.insert(id);
    log(Op::AddVertex, id);
}

void Graph::revive_vertex(VertexId id) {
    if (id >= next_id()) {
        add_vertex_with_id(id);
        return;
    }
    if (alive_[id]) throw InvalidVertex("vertex is live: " + std::to_string(id));
    alive_[id] = 1;
    adj_[id].clear();
    live_.insert(id);
    log(Op::AddVertex, id);
}

void Graph::remove_vertex(VertexId v) {
    check(v);
    VertexList nb = adj_[v];
    for (VertexId u : nb) remove_edge(v, u);
    alive_[v] = 0;
    live_.erase(v);
    log(Op::RemoveVertex, v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    check(u);
    check(v);
    if (u == v) throw EdgeStateError("self-loop " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw EdgeStateError("edge exists " + std::to_string(u) + "-" + std::to_string(v));
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
    log(Op::AddEdge, u, v);
}

void Graph::remove_edge(VertexId u, VertexId v) {
    check(u);
    check(v);
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v)
        throw EdgeStateError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    a.erase(it);
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --m_;
    log(Op::RemoveEdge, u, v);
}

VertexId Graph::merge_vertices(std::span<const VertexId> s) {
    if (s.empty()) throw InvalidArgument("merge of empty set");
    for (VertexId x : s) check(x);
    VertexList nb = neighborhood(s);
    VertexId id = add_vertex();
    for (VertexId x : s) remove_vertex(x);
    for (VertexId x : nb) add_edge(id, x);
    return id;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check(u);
    check(v);
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::degree(VertexId v) const {
    check(v);
    return adj_[v].size();
}

const VertexList& Graph::neighbors(VertexId v) const {
    check(v);
    return adj_[v];
}

VertexList Graph::closed_neighborhood(VertexId v) const {
    VertexList r = neighbors(v);
    r.insert(std::lower_bound(r.begin(), r.end(), v), v);
    return r;
}

VertexList Graph::neighborhood(std::span<const VertexId> s) const {
    VertexList src(s.begin(), s.end());
    std::sort(src.begin(), src.end());
    VertexList r;
    for (VertexId x : src)
        for (VertexId y : neighbors(x)) r.push_back(y);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return set_difference(r, src);
}

VertexList Graph::closed_neighborhood(std::span<const VertexId> s) const {
    VertexList src(s.begin(), s.end());
    std::sort(src.begin(), src.end());
    return set_union(neighborhood(s), src);
}

VertexList Graph::ball(VertexId r, std::size_t radius) const {
    check(r);
    VertexSet seen{r};
    std::vector<VertexId> frontier{r};
    for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
        std::vector<VertexId> next;
        for (VertexId x : frontier)
            for (VertexId y : adj_[x])
                if (seen.insert(y).second) next.push_back(y);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool Graph::is_independent_set(std::span<const VertexId> s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (has_edge(s[i], s[j])) return false;
    return true;
}

bool Graph::is_clique(std::span<const VertexId> s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !has_edge(s[i], s[j])) return false;
    return true;
}

Graph Graph::induced_subgraph(std::span<const VertexId> s) const {
    VertexList keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (VertexId x : keep) check(x);
    Graph g;
    for (VertexId x : keep) g.add_vertex_with_id(x);
    for (VertexId x : keep)
        for (VertexId y : adj_[x])
            if (x < y && std::binary_search(keep.begin(), keep.end(), y)) g.add_edge(x, y);
    return g;
}

Graph Graph::complement_of_induced(std::span<const VertexId> s) const {
    VertexList keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (VertexId x : keep) check(x);
    Graph g;
    for (VertexId x : keep) g.add_vertex_with_id(x);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (!has_edge(keep[i], keep[j])) g.add_edge(keep[i], keep[j]);
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> r;
    r.reserve(m_);
    for (VertexId x : live_)
        for (VertexId y : adj_[x])
            if (x < y) r.emplace_back(x, y);
    return r;
}

VertexId Graph::max_degree_vertex() const {
    if (live_.empty()) throw InvalidArgument("empty graph");
    VertexId best = *live_.begin();
    for (VertexId x : live_)
        if (adj_[x].size() > adj_[best].size()) best = x;
    return best;
}

void Graph::validate() const {
    std::size_t deg_sum = 0;
    for (VertexId x = 0; x < alive_.size(); ++x) {
        if (!alive_[x]) {
            if (!adj_[x].empty()) throw Error("dead vertex with adjacency " + std::to_string(x));
            continue;
        }
        if (!live_.count(x)) throw Error("live set mismatch");
        const auto& a = adj_[x];
        if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end())
            throw Error("adjacency not a sorted set at " + std::to_string(x));
        for (VertexId y : a) {
            if (y == x) throw Error("self-loop at " + std::to_string(x));
            if (!contains(y)) throw Error("edge to dead vertex " + std::to_string(y));
            if (!std::binary_search(adj_[y].begin(), adj_[y].end(), x)) throw Error("asymmetric adjacency");
        }
        deg_sum += a.size();
    }
    if (live_.size() != static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1)))
        throw Error("live set mismatch");
    if (deg_sum != 2 * m_) throw Error("degree sum != 2m");
}

bool Graph::operator==(const Graph& o) const {
    if (live_ != o.live_ || m_ != o.m_) return false;
    for (VertexId x : live_)
        if (adj_[x] != o.adj_[x]) return false;
    return true;
}

void Graph::begin_journal() { journal_.emplace(); }

std::vector<Graph::Change> Graph::take_journal() {
    std::vector<Change> r = journal_ ? std::move(*journal_) : std::vector<Change>{};
    journal_.reset();
    return r;
}

VertexList set_union(const VertexList& a, const VertexList& b) {
    VertexList r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexList set_difference(const VertexList& a, const VertexList& b) {
    VertexList r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexList set_intersection(const VertexList& a, const VertexList& b) {
    VertexList r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool includes(const VertexList& a, const VertexList& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

bool contains_sorted(const VertexList& a, VertexId x) { return std::binary_search(a.begin(), a.end(), x); }

VertexList sorted(VertexList a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace vck
