#include <gtest/gtest.h>

#include "support.hpp"
#include "vck/lifting.hpp"
#include "vck/solver.hpp"

using namespace vck;
using namespace vck::test;

namespace {

std::size_t subset_tau(const Graph& g) {
    VertexList ids = g.vertex_list();
    std::size_t n = ids.size(), best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(ids[i]);
        if (s.size() < best && verify_cover(g, s)) best = s.size();
    }
    return best;
}

}  // namespace

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_tau(complete(3)), 2u);
    EXPECT_EQ(brute_force_tau(path(4)), 2u);
    EXPECT_EQ(brute_force_tau(petersen()), 6u);
    EXPECT_EQ(brute_force_tau(Graph()), 0u);
    EXPECT_EQ(brute_force_tau(complete(7)), 6u);
}

TEST(BruteForce, MatchesSubsetEnumeration) {
    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 1 + rng.below(11), 0.1 + 0.1 * static_cast<double>(rng.below(6)));
        auto r = brute_force_cover(g);
        EXPECT_EQ(r.size, subset_tau(g));
        EXPECT_EQ(r.cover.size(), r.size);
        EXPECT_TRUE(verify_cover(g, r.cover));
    }
}

TEST(BranchAndReduce, MatchesBruteForce) {
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        Graph g = random_graph(rng, 1 + rng.below(16), 0.05 + 0.1 * static_cast<double>(rng.below(6)));
        auto r = branch_and_reduce_solve(g);
        EXPECT_EQ(r.size, brute_force_tau(g));
        EXPECT_EQ(r.cover.size(), r.size);
        EXPECT_TRUE(verify_cover(g, r.cover));
    }
}

TEST(BranchAndReduce, MidSize) {
    Rng rng(3);
    Graph g = random_graph(rng, 50, 0.08);
    auto r = branch_and_reduce_solve(g);
    EXPECT_TRUE(verify_cover(g, r.cover));
    EXPECT_EQ(r.size, brute_force_tau(g));
    Graph p = petersen();
    EXPECT_EQ(branch_and_reduce_solve(p).size, 6u);
}

TEST(VerifyCover, Rejects) {
    EXPECT_FALSE(verify_cover(path(3), {0}));
    EXPECT_TRUE(verify_cover(path(3), {1}));
}
