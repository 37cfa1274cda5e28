#include <gtest/gtest.h>

#include "support.hpp"
#include "vck/graph.hpp"

using namespace vck;
using namespace vck::test;

TEST(Graph, IdsAreNeverReused) {
    Graph g;
    EXPECT_EQ(g.add_vertex(), 0u);
    g.add_vertex();
    g.remove_vertex(1);
    EXPECT_EQ(g.add_vertex(), 2u);
    EXPECT_EQ(g.vertex_list(), (VertexList{0, 2}));
    g.add_vertex();
    EXPECT_EQ(g.vertex_list(), (VertexList{0, 2, 3}));
}

TEST(Graph, AddVertexKeepsEdges) {
    Graph g = cycle(5);
    g.add_vertex();
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_EQ(g.num_edges(), 5u);
}

TEST(Graph, RemoveVertex) {
    Graph t = complete(3);
    t.remove_vertex(2);
    EXPECT_EQ(t.num_edges(), 1u);
    EXPECT_TRUE(t.has_edge(0, 1));

    Graph s = star(3);
    s.remove_vertex(0);
    EXPECT_EQ(s.num_vertices(), 3u);
    EXPECT_EQ(s.num_edges(), 0u);
    EXPECT_THROW(s.remove_vertex(0), InvalidVertex);
    EXPECT_THROW(s.remove_vertex(77), InvalidVertex);
}

TEST(Graph, EdgeOps) {
    Graph p2 = path(2);
    EXPECT_THROW(p2.add_edge(0, 1), EdgeStateError);
    EXPECT_THROW(p2.add_edge(0, 0), EdgeStateError);
    Graph p3 = path(3);
    p3.add_edge(0, 2);
    EXPECT_EQ(p3.num_edges(), 3u);
    EXPECT_TRUE(p3.is_clique(VertexList{0, 1, 2}));
    p3.remove_edge(0, 2);
    EXPECT_EQ(p3, path(3));
    EXPECT_THROW(p3.remove_edge(0, 2), EdgeStateError);
    p3.validate();
}

TEST(Graph, Merge) {
    Graph p3 = path(3);
    VertexList all{0, 1, 2};
    VertexId v = p3.merge_vertices(all);
    EXPECT_EQ(p3.num_vertices(), 1u);
    EXPECT_EQ(p3.degree(v), 0u);

    Graph p5 = path(5);
    VertexList mid{1, 2, 3};
    VertexId w = p5.merge_vertices(mid);
    EXPECT_EQ(p5.num_vertices(), 3u);
    EXPECT_EQ(p5.neighbors(w), (VertexList{0, 4}));

    Graph c = cycle(4);
    VertexList one{0};
    VertexId x = c.merge_vertices(one);
    EXPECT_EQ(c.neighbors(x), (VertexList{1, 3}));
    EXPECT_FALSE(c.contains(0));
    EXPECT_THROW(c.merge_vertices(VertexList{}), InvalidArgument);
    c.validate();
}

TEST(Graph, Ball) {
    Graph p5 = path(5);
    EXPECT_EQ(p5.ball(2, 1).size(), 3u);
    EXPECT_EQ(p5.ball(3, 0), (VertexList{3}));
    EXPECT_EQ(cycle(6).ball(0, 3).size(), 6u);
    Graph two = path(3);
    VertexId lone = two.add_vertex();
    EXPECT_EQ(two.ball(0, 10), (VertexList{0, 1, 2}));
    EXPECT_EQ(two.ball(lone, 10), (VertexList{lone}));
    two.remove_vertex(lone);
    EXPECT_THROW(two.ball(lone, 1), InvalidVertex);
}

TEST(Graph, StructureQueries) {
    Graph c4 = cycle(4);
    EXPECT_TRUE(c4.is_independent_set(VertexList{0, 2}));
    EXPECT_FALSE(c4.is_independent_set(VertexList{0, 1}));
    EXPECT_TRUE(complete(4).is_clique(VertexList{0, 1, 3}));
    Graph three(3);
    Graph comp = three.complement_of_induced(VertexList{0, 1, 2});
    EXPECT_EQ(comp.num_edges(), 3u);
    EXPECT_EQ(c4.closed_neighborhood(0), (VertexList{0, 1, 3}));
    EXPECT_EQ(c4.neighborhood(VertexList{0, 1}), (VertexList{2, 3}));
    Graph sub = c4.induced_subgraph(VertexList{0, 1, 2});
    EXPECT_EQ(sub.num_edges(), 2u);
    EXPECT_EQ(c4.degree(0), 2u);
    EXPECT_THROW(c4.degree(9), InvalidVertex);
}

TEST(Graph, RandomMutationsKeepInvariants) {
    Rng rng(7);
    Graph g = random_graph(rng, 30, 0.2);
    for (int step = 0; step < 2000; ++step) {
        VertexList vs = g.vertex_list();
        int op = static_cast<int>(rng.below(4));
        if (op == 0 || vs.size() < 3) {
            g.add_vertex();
        } else if (op == 1) {
            g.remove_vertex(rng.pick(vs));
        } else if (op == 2) {
            VertexId a = rng.pick(vs), b = rng.pick(vs);
            if (a == b) continue;
            if (g.has_edge(a, b)) g.remove_edge(a, b);
            else g.add_edge(a, b);
        } else {
            VertexList s = sorted(rng.sample(vs, 1 + rng.below(3)));
            std::size_t n0 = g.num_vertices();
            g.merge_vertices(s);
            EXPECT_EQ(g.num_vertices(), n0 - s.size() + 1);
        }
    }
    g.validate();
    std::size_t sum = 0;
    for (VertexId v : g.vertices()) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.num_edges());
}

TEST(Graph, Journal) {
    Graph g = path(3);
    g.begin_journal();
    g.add_edge(0, 2);
    g.remove_vertex(1);
    auto j = g.take_journal();
    EXPECT_EQ(j.size(), 4u);  // add edge, two edge removals, vertex removal
}
