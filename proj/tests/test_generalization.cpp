#include <gtest/gtest.h>

#include "lemmas.hpp"
#include "vck/confluence.hpp"

using namespace vck;
using namespace vck::test;

TEST(Generalization, AllLemmasUpToSixVertices) {
    auto results = check_generalization_lemmas(enumerate_graphs(6));
    ASSERT_EQ(results.size(), 11u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_GT(results[i].sites, 0u) << results[i].name;
        EXPECT_EQ(results[i].failures, 0u) << results[i].name << ": " << results[i].first_failure;
    }
    EXPECT_EQ(results[10].sites, 0u);
}
