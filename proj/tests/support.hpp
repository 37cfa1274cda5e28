#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "vck/graph.hpp"
#include "vck/rng.hpp"

namespace vck::test {

inline Graph from_edges(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    if (n > 2) g.add_edge(0, static_cast<VertexId>(n - 1));
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (VertexId i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    Graph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (rng.chance(p)) g.add_edge(i, j);
    return g;
}

// Fig. 1 style chain of triangles: a-p-q, c-r-s pendant triangles joined through b-q-r
inline Graph chain_of_triangles() {
    // a=0 b=1 c=2 p=3 q=4 r=5 s=6
    return from_edges(7, {{0, 3}, {0, 4}, {3, 4}, {2, 5}, {2, 6}, {5, 6}, {1, 4}, {1, 5}, {4, 5}});
}

// Relabel by a permutation of positions (sorted live ids -> 0..n-1).
inline Graph permuted(const Graph& g, const std::vector<VertexId>& perm) {
    VertexList ids = g.vertex_list();
    Graph h(ids.size());
    auto pos = [&](VertexId x) { return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin()); };
    for (const Edge& e : g.edges()) h.add_edge(perm[pos(e.u)], perm[pos(e.v)]);
    return h;
}

// Isomorphism by trying every permutation; small graphs only.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    VertexList ia = a.vertex_list(), ib = b.vertex_list();
    std::vector<std::size_t> p(ia.size());
    std::iota(p.begin(), p.end(), 0);
    auto ea = a.edges();
    do {
        bool ok = true;
        for (const Edge& e : ea) {
            auto pu = std::lower_bound(ia.begin(), ia.end(), e.u) - ia.begin();
            auto pv = std::lower_bound(ia.begin(), ia.end(), e.v) - ia.begin();
            if (!b.has_edge(ib[p[pu]], ib[p[pv]])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace vck::test
