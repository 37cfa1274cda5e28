#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vck {

using VertexId = std::uint32_t;
using VertexList = std::vector<VertexId>;   // kept sorted unless noted
using VertexSet = std::set<VertexId>;

struct Edge {
    VertexId u = 0, v = 0;
    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidVertex : Error { using Error::Error; };
struct EdgeStateError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

class Graph {
public:
    enum class Op : std::uint8_t { AddVertex, RemoveVertex, AddEdge, RemoveEdge };
    struct Change {
        Op op;
        VertexId u, v;
    };

    Graph() = default;
    explicit Graph(std::size_t n);

    VertexId add_vertex();
    // Only for replaying recorded modifications: id must not be below next_id().
    void add_vertex_with_id(VertexId id);
    // Brings back a dead id. Used when rewinding a trace; breaks no-reuse on purpose.
    void revive_vertex(VertexId id);
    void remove_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    VertexId merge_vertices(std::span<const VertexId> s);

    bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;
    const VertexList& neighbors(VertexId v) const;
    VertexList closed_neighborhood(VertexId v) const;
    VertexList neighborhood(std::span<const VertexId> s) const;
    VertexList closed_neighborhood(std::span<const VertexId> s) const;
    VertexList ball(VertexId r, std::size_t radius) const;
    bool is_independent_set(std::span<const VertexId> s) const;
    bool is_clique(std::span<const VertexId> s) const;
    Graph induced_subgraph(std::span<const VertexId> s) const;
    Graph complement_of_induced(std::span<const VertexId> s) const;

    std::size_t num_vertices() const { return live_.size(); }
    std::size_t num_edges() const { return m_; }
    bool empty() const { return live_.empty(); }
    const VertexSet& vertices() const { return live_; }
    VertexList vertex_list() const { return {live_.begin(), live_.end()}; }
    VertexId next_id() const { return static_cast<VertexId>(alive_.size()); }
    std::vector<Edge> edges() const;
    VertexId max_degree_vertex() const;

    void validate() const;
    bool operator==(const Graph& o) const;

    void begin_journal();
    std::vector<Change> take_journal();

private:
    void check(VertexId v) const;
    void log(Op op, VertexId u, VertexId v = 0) {
        if (journal_) journal_->push_back({op, u, v});
    }

    std::vector<VertexList> adj_;
    std::vector<char> alive_;
    VertexSet live_;
    std::size_t m_ = 0;
    std::optional<std::vector<Change>> journal_;
};

enum class Mode : std::uint8_t { Counting, Budget };

struct Instance {
    Graph graph;
    std::int64_t k = 0;
    Mode mode = Mode::Counting;
};

// sorted-vector helpers
VertexList set_union(const VertexList& a, const VertexList& b);
VertexList set_difference(const VertexList& a, const VertexList& b);
VertexList set_intersection(const VertexList& a, const VertexList& b);
bool includes(const VertexList& a, const VertexList& b);  // b subset of a
bool contains_sorted(const VertexList& a, VertexId x);
VertexList sorted(VertexList a);

}  // namespace vck
