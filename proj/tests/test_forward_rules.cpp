#include <gtest/gtest.h>

#include "support.hpp"
#include "vck/confluence.hpp"
#include "vck/engine.hpp"
#include "vck/forward_rules.hpp"
#include "vck/isomorphism.hpp"
#include "vck/lp.hpp"
#include "vck/solver.hpp"
#include "vck/unconfined.hpp"

using namespace vck;
using namespace vck::test;

namespace {

struct Applied {
    Instance inst;
    ModificationRecord rec;
};

Applied run(const Graph& g, const Site& s, RuleConfig cfg = {}, Instance base = {}) {
    base.graph = g;
    ModificationRecord rec = apply_site(base, s, cfg);
    return {base, rec};
}

Site S(Rule r, VertexList anchors, std::vector<VertexList> groups = {}) { return {r, std::move(anchors), std::move(groups)}; }

bool has_site(const Graph& g, Rule r, const VertexList& anchors, RuleConfig cfg = {}) {
    for (const Site& s : find_sites(Instance{g}, r, cfg))
        if (s.anchors == anchors) return true;
    return false;
}

}  // namespace

TEST(Deg0, Examples) {
    auto r = run(Graph(1), S(Rule::Deg0, {0}));
    EXPECT_TRUE(r.inst.graph.empty());
    EXPECT_EQ(r.rec.delta_k, 0);
    Graph g = complete(3);
    g.add_vertex();
    EXPECT_TRUE(isomorphic(run(g, S(Rule::Deg0, {3})).inst.graph, complete(3)));
    Instance inst{star(1)};
    EXPECT_THROW(apply_site(inst, S(Rule::Deg0, {1}), {}), StaleSite);
    EXPECT_EQ(inst.graph, star(1));
}

TEST(Deg1, Examples) {
    auto a = run(path(2), S(Rule::Deg1, {0, 1}));
    EXPECT_TRUE(a.inst.graph.empty());
    EXPECT_EQ(a.rec.delta_k, -1);
    auto b = run(star(3), S(Rule::Deg1, {1, 0}));
    EXPECT_EQ(b.inst.graph.num_vertices(), 2u);
    EXPECT_EQ(b.inst.graph.num_edges(), 0u);
    auto c = run(path(4), S(Rule::Deg1, {0, 1}));
    EXPECT_TRUE(isomorphic(c.inst.graph, path(2)));
    EXPECT_EQ(brute_force_tau(path(4)), brute_force_tau(c.inst.graph) + 1);
}

TEST(Deg2Fold, Examples) {
    auto a = run(path(3), S(Rule::Deg2Fold, {1, 0, 2}));
    EXPECT_EQ(a.inst.graph.num_vertices(), 1u);
    EXPECT_EQ(a.rec.delta_k, -1);
    auto b = run(path(5), S(Rule::Deg2Fold, {2, 1, 3}));
    EXPECT_TRUE(isomorphic(b.inst.graph, path(3)));
    EXPECT_EQ(brute_force_tau(path(5)), 2u);
    EXPECT_TRUE(find_sites(Instance{complete(3)}, Rule::Deg2Fold, {}).empty());
}

TEST(Deg3IS, Examples) {
    VertexList p{1, 2, 3};
    do {
        auto r = run(star(3), S(Rule::Deg3IS, {0, p[0], p[1], p[2]}));
        EXPECT_TRUE(isomorphic(r.inst.graph, path(3)));
        EXPECT_EQ(r.rec.delta_k, 0);
    } while (std::next_permutation(p.begin(), p.end()));

    // v=0, a=1, b=2, c=3, b has outside neighbour x=4
    Graph g = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {2, 4}});
    auto r = run(g, S(Rule::Deg3IS, {0, 1, 2, 3}));
    EXPECT_TRUE(r.inst.graph.has_edge(1, 2));
    EXPECT_TRUE(r.inst.graph.has_edge(2, 3));
    EXPECT_TRUE(r.inst.graph.has_edge(1, 4));
    EXPECT_EQ(brute_force_tau(g), brute_force_tau(r.inst.graph));

    Graph h = star(3);
    h.add_edge(1, 2);
    EXPECT_TRUE(find_sites(Instance{h}, Rule::Deg3IS, {}).empty());
}

TEST(DegGtK, Examples) {
    Instance inst{star(5), 3, Mode::Budget};
    auto sites = find_sites(inst, Rule::DegGtK, {});
    ASSERT_EQ(sites.size(), 1u);
    apply_site(inst, sites[0], {});
    EXPECT_EQ(inst.graph.num_edges(), 0u);
    EXPECT_EQ(inst.graph.num_vertices(), 5u);
    EXPECT_EQ(inst.k, 2);
    EXPECT_TRUE(find_sites(Instance{star(5), 3, Mode::Counting}, Rule::DegGtK, {}).empty());
    EXPECT_TRUE(find_sites(Instance{star(5), 5, Mode::Budget}, Rule::DegGtK, {}).empty());
}

TEST(Buss, Examples) {
    EXPECT_FALSE(buss_no_instance_check(Instance{Graph(), 0, Mode::Budget}));
    EXPECT_TRUE(buss_no_instance_check(Instance{path(2), 0, Mode::Budget}));
    EXPECT_FALSE(buss_no_instance_check(Instance{cycle(4), 2, Mode::Budget}));
}

TEST(Domination, Examples) {
    // triangle u=0, v=1, w=2 plus pendant x=3 on u
    Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto r = run(g, S(Rule::Dom, {0, 1}));
    EXPECT_EQ(r.inst.graph.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(r.inst.graph.degree(3), 0u);
    EXPECT_EQ(r.rec.delta_k, -1);
    EXPECT_EQ(brute_force_tau(g), 2u);
    EXPECT_EQ(brute_force_tau(r.inst.graph), 1u);

    auto k3 = run(complete(3), S(Rule::Dom, {0, 1}));
    EXPECT_EQ(k3.inst.graph.edges(), (std::vector<Edge>{{1, 2}}));

    Instance c4{cycle(4)};
    EXPECT_THROW(apply_site(c4, S(Rule::Dom, {0, 2}), {}), StaleSite);
}

TEST(Unconfined, Examples) {
    Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto res = unconfined_check(g, 0);
    EXPECT_TRUE(res.yes);
    EXPECT_EQ(res.steps.size(), 1u);

    auto p4 = run(path(4), S(Rule::Unconf, {0}));
    EXPECT_TRUE(isomorphic(p4.inst.graph, path(3)));
    EXPECT_EQ(p4.rec.delta_k, -1);
    EXPECT_EQ(brute_force_tau(path(4)), 2u);
    EXPECT_EQ(brute_force_tau(path(3)), 1u);

    EXPECT_FALSE(unconfined_check(path(3), 0).yes);
    EXPECT_FALSE(has_site(path(3), Rule::Unconf, {0}));
}

TEST(UnconfinedKappa, SpecializesAlgorithmOne) {
    for (const Graph& g : enumerate_graphs(6))
        for (VertexId v : g.vertices())
            if (unconfined_check(g, v).yes) EXPECT_TRUE(unconfined_kappa_check(g, v, 1));
}

TEST(UnconfinedKappa, KappaZeroHasNoSites) {
    RuleConfig cfg;
    cfg.kappa = 0;
    for (const Graph& g : enumerate_graphs(5))
        EXPECT_TRUE(find_sites(Instance{g}, Rule::UnconfKappa, cfg).empty());
}

TEST(UnconfinedKappa, FindsVerticesAlgorithmOneMisses) {
    std::size_t extra = 0;
    for (const Graph& g : enumerate_graphs(7)) {
        std::size_t tau = brute_force_tau(g);
        for (VertexId v : g.vertices()) {
            if (unconfined_check(g, v).yes || !unconfined_kappa_check(g, v, 2)) continue;
            ++extra;
            VertexList rest = set_difference(g.vertex_list(), {v});
            EXPECT_EQ(brute_force_tau(g.induced_subgraph(rest)) + 1, tau);
        }
    }
    EXPECT_GT(extra, 0u);
}

TEST(UnconfinedKappa, LiteralVariantIsUnsafe) {
    // v=0 w=1 u=2 x1=3 x2=4 z=5
    Graph g = from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}});
    VertexList rest{1, 2, 3, 4, 5};
    EXPECT_EQ(brute_force_tau(g), 3u);
    EXPECT_EQ(brute_force_tau(g.induced_subgraph(rest)), 3u);
    EXPECT_TRUE(unconfined_kappa_check(g, 0, 2, false));
    EXPECT_FALSE(unconfined_kappa_check(g, 0, 4, true));
}

TEST(Desk, Examples) {
    auto a = run(cycle(4), S(Rule::Desk, {0, 1, 2, 3}));
    EXPECT_TRUE(a.inst.graph.empty());
    EXPECT_EQ(a.rec.delta_k, -2);
    EXPECT_EQ(brute_force_tau(cycle(4)), 2u);

    Graph g = cycle(4);
    VertexId p = g.add_vertex(), q = g.add_vertex();
    g.add_edge(0, p);
    g.add_edge(1, q);
    auto b = run(g, S(Rule::Desk, {0, 1, 2, 3}));
    EXPECT_EQ(b.inst.graph.edges(), (std::vector<Edge>{{p, q}}));
    EXPECT_EQ(brute_force_tau(g), brute_force_tau(b.inst.graph) + 2);

    Graph c = cycle(4);
    c.add_edge(0, 2);
    EXPECT_TRUE(find_sites(Instance{c}, Rule::Desk, {}).empty());
}

TEST(CN, Partition) {
    Graph k4 = complete(4);
    EXPECT_FALSE(find_cn_partition(k4, 0).has_value());
    Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto p = find_cn_partition(g, 0);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->first, (VertexList{1, 2}));
    EXPECT_EQ(p->second, (VertexList{3}));
    EXPECT_FALSE(find_cn_partition(star(3), 0).has_value());
}

TEST(CN, PartitionMatchesBruteForceSearch) {
    for (const Graph& g : enumerate_graphs(6))
        for (VertexId v : g.vertices()) {
            VertexList nb = g.neighbors(v);
            bool any = false;
            for (std::uint32_t mask = 0; mask < (1u << nb.size()); ++mask) {
                VertexList c1, c2;
                for (std::size_t i = 0; i < nb.size(); ++i) (mask >> i & 1 ? c2 : c1).push_back(nb[i]);
                if (cn_partition_valid(g, v, c1, c2)) any = true;
            }
            auto p = find_cn_partition(g, v);
            EXPECT_EQ(p.has_value(), any);
            if (p) EXPECT_TRUE(cn_partition_valid(g, v, p->first, p->second));
        }
}

TEST(CN, Examples) {
    // v=0 a=1 b=2 c=3 x=4 y=5
    Graph g = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}, {1, 5}});
    auto r = run(g, S(Rule::CN, {0}, {{1, 2}, {3}}));
    EXPECT_FALSE(r.inst.graph.contains(0));
    EXPECT_FALSE(r.inst.graph.contains(3));
    EXPECT_TRUE(r.inst.graph.has_edge(1, 4));
    EXPECT_TRUE(r.inst.graph.has_edge(2, 4));
    EXPECT_EQ(r.rec.delta_k, -1);
    EXPECT_EQ(brute_force_tau(g), 3u);
    EXPECT_EQ(brute_force_tau(r.inst.graph), 2u);

    auto cn = run(path(5), S(Rule::CN, {2}, {{1}, {3}}));
    auto fold = run(path(5), S(Rule::Deg2Fold, {2, 1, 3}));
    EXPECT_TRUE(isomorphic(cn.inst.graph, fold.inst.graph));
    EXPECT_EQ(cn.rec.delta_k, fold.rec.delta_k);
    EXPECT_TRUE(find_sites(Instance{star(3)}, Rule::CN, {}).empty());
}

TEST(OEDel, Examples) {
    auto r = run(path(3), S(Rule::OEDel, {0, 1, 2}));
    EXPECT_EQ(r.inst.graph.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(r.inst.graph.num_vertices(), 3u);
    EXPECT_EQ(r.rec.delta_k, 0);
    EXPECT_TRUE(find_sites(Instance{complete(3)}, Rule::OEDel, {}).empty());
    for (const Graph& g : enumerate_graphs(6))
        for (const Site& s : find_sites(Instance{g}, Rule::OEDel, {})) {
            auto x = run(g, s);
            EXPECT_EQ(x.inst.graph.num_edges() + 1, g.num_edges());
            EXPECT_EQ(x.inst.graph.num_vertices(), g.num_vertices());
            EXPECT_EQ(x.rec.delta_k, 0);
        }
}

TEST(Struction, Examples) {
    // degree-2 vertex of a triangle with a tail: Struction = Triangle rule
    Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto st = run(g, S(Rule::Struct, {0, 1, 2}));
    auto tr = run(g, S(Rule::Triangle, {0, 1, 2}));
    EXPECT_EQ(st.rec.delta_k, -2);
    EXPECT_EQ(st.rec.removed_vertices.size(), 3u);
    EXPECT_EQ(canonical_form(st.inst.graph), canonical_form(tr.inst.graph));
    EXPECT_EQ(st.rec.delta_k, tr.rec.delta_k);

    auto p3 = run(path(3), S(Rule::Struct, {1, 0, 2}));
    EXPECT_EQ(p3.inst.graph.num_vertices(), 1u);
    EXPECT_EQ(p3.rec.delta_k, -1);

    auto k13 = run(star(3), S(Rule::Struct, {0, 1, 2, 3}));
    EXPECT_TRUE(isomorphic(k13.inst.graph, path(3)));
    EXPECT_EQ(k13.rec.delta_k, 0);
    auto d3 = run(star(3), S(Rule::Deg3IS, {0, 1, 2, 3}));
    EXPECT_EQ(canonical_form(k13.inst.graph), canonical_form(d3.inst.graph));
}

TEST(Struction, GuardAndUnguardedFlag) {
    // K_{1,4} centre: |W| = 6 > d = 4
    EXPECT_FALSE(has_site(star(4), Rule::Struct, {0, 1, 2, 3, 4}));
    RuleConfig cfg;
    cfg.unguarded_struction = true;
    EXPECT_TRUE(has_site(star(4), Rule::Struct, {0, 1, 2, 3, 4}, cfg));
    for (const Graph& g : enumerate_graphs(6))
        for (const Site& s : find_sites(Instance{g}, Rule::Struct, {})) {
            auto x = run(g, s);
            EXPECT_LT(x.inst.graph.num_vertices(), g.num_vertices());
            EXPECT_LE(x.rec.delta_k, 0);
        }
}

TEST(Magnet, Examples) {
    auto r = run(complete(3), S(Rule::Magnet, {0, 1}));
    EXPECT_EQ(r.inst.graph.num_vertices(), 2u);
    EXPECT_EQ(r.inst.graph.num_edges(), 1u);
    EXPECT_TRUE(r.inst.graph.has_edge(2, r.rec.created[0][0]));
    EXPECT_EQ(r.rec.delta_k, -1);

    Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
    Instance inst{g};
    EXPECT_THROW(apply_site(inst, S(Rule::Magnet, {0, 1}), {}), StaleSite);
}

TEST(LP, ExtremeSolutions) {
    LpSolution e = solve_lp_extreme(path(2));
    EXPECT_EQ(e.objective2, 2);
    EXPECT_TRUE(e.half.empty());

    LpSolution s = solve_lp_extreme(star(3));
    EXPECT_EQ(s.objective2, 2);
    EXPECT_EQ(s.v1, (VertexList{0}));
    EXPECT_EQ(s.v0, (VertexList{1, 2, 3}));

    LpSolution c = solve_lp_extreme(cycle(4));
    EXPECT_EQ(c.objective2, 4);
    EXPECT_TRUE(c.half.empty());
    EXPECT_EQ(c.v1.size(), 2u);
    EXPECT_TRUE(cycle(4).is_independent_set(c.v0));

    LpSolution c5 = solve_lp_extreme(cycle(5));
    EXPECT_EQ(c5.half.size(), 5u);
}

TEST(LP, Apply) {
    Instance a{star(3)};
    auto sa = find_sites(a, Rule::LP, {});
    ASSERT_EQ(sa.size(), 1u);
    EXPECT_EQ(apply_site(a, sa[0], {}).delta_k, -1);
    EXPECT_TRUE(a.graph.empty());

    Instance b{cycle(4)};
    auto sb = find_sites(b, Rule::LP, {});
    ASSERT_EQ(sb.size(), 1u);
    EXPECT_EQ(apply_site(b, sb[0], {}).delta_k, -2);
    EXPECT_TRUE(b.graph.empty());

    EXPECT_TRUE(find_sites(Instance{cycle(5)}, Rule::LP, {}).empty());
}

TEST(Triangle, RemovesTheTriangle) {
    auto r = run(complete(3), S(Rule::Triangle, {0, 1, 2}));
    EXPECT_TRUE(r.inst.graph.empty());
    EXPECT_EQ(r.rec.delta_k, -2);
    EXPECT_TRUE(find_sites(Instance{path(3)}, Rule::Triangle, {}).empty());
}

TEST(ForwardRules, NeverIncreaseVertexCount) {
    RuleConfig cfg;
    for (const Graph& g : enumerate_graphs(6))
        for (Rule r : table1_forward_rules())
            for (const Site& s : find_sites(Instance{g}, r, cfg)) {
                auto x = run(g, s, cfg);
                EXPECT_LE(x.inst.graph.num_vertices(), g.num_vertices());
                if (r != Rule::Deg3IS && r != Rule::Desk && r != Rule::Struct && r != Rule::CN)
                    EXPECT_LE(x.inst.graph.num_edges(), g.num_edges()) << rule_name(r);
            }
}

TEST(ForwardRules, Deterministic) {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, 9, 0.35);
        for (Rule r : table1_forward_rules())
            for (const Site& s : find_sites(Instance{g}, r, {})) {
                auto a = run(g, s), b = run(g, s);
                EXPECT_EQ(a.rec, b.rec);
                EXPECT_EQ(a.inst.graph, b.inst.graph);
            }
    }
}
