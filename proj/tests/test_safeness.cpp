#include <gtest/gtest.h>

#include "safeness.hpp"
#include "support.hpp"
#include "vck/backward_rules.hpp"
#include "vck/confluence.hpp"

using namespace vck;
using namespace vck::test;

namespace {

const std::vector<Graph>& small_graphs() {
    static const std::vector<Graph> g = enumerate_graphs(6);
    return g;
}

}  // namespace

TEST(Safeness, ForwardRulesAllSitesSmallGraphs) {
    RuleConfig cfg;
    for (const Graph& g : small_graphs()) {
        std::size_t tau = brute_force_tau(g);
        for (Rule r : kAllRules) {
            if (!is_forward(r)) continue;
            Instance inst{g, 0, r == Rule::DegGtK ? Mode::Budget : Mode::Counting};
            for (std::int64_t k : r == Rule::DegGtK ? std::vector<std::int64_t>{1, 2, 3} : std::vector<std::int64_t>{0}) {
                inst.k = k;
                for (const Site& s : find_sites(inst, r, cfg)) {
                    auto err = check_site(inst, s, cfg, tau);
                    ASSERT_FALSE(err) << *err;
                }
            }
        }
    }
}

TEST(Safeness, BackwardRulesSmallGraphs) {
    RuleConfig cfg;
    Rng rng(11);
    for (const Graph& g : small_graphs()) {
        std::size_t tau = brute_force_tau(g);
        Instance inst{g, 0, Mode::Counting};
        for (Rule r : backward_rules()) {
            std::vector<Site> sites = find_sites(inst, r, cfg);
            for (int i = 0; i < 20; ++i)
                if (auto s = sample_backward_site(inst, r, rng)) sites.push_back(*s);
            for (const Site& s : sites) {
                if (!site_valid(inst, s, cfg)) continue;
                auto err = check_site(inst, s, cfg, tau);
                ASSERT_FALSE(err) << *err;
                auto rt = check_round_trip(inst, s, cfg);
                ASSERT_FALSE(rt) << *rt;
            }
        }
    }
}
