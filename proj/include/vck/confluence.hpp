#pragma once

#include <string>
#include <vector>

#include "vck/graph.hpp"
#include "vck/isomorphism.hpp"
#include "vck/rules.hpp"

namespace vck {

// All non-isomorphic graphs with 1..max_n vertices, by vertex count then canonical code.
std::vector<Graph> enumerate_graphs(std::size_t max_n);

struct Outcome {
    CanonicalForm form;
    std::int64_t k = 0;
    std::size_t n = 0, m = 0;
    bool operator==(const Outcome& o) const { return form == o.form && k == o.k; }
};

// Randomized exhaustive reduction of g under `rules` with the stream derived from (seed, trial).
Outcome reduce_outcome(const Graph& g, const std::vector<Rule>& rules, std::uint64_t seed, std::uint64_t trial,
                       const RuleConfig& cfg = {});

struct ConfluenceVerdict {
    Rule a = Rule::Deg0, b = Rule::Deg0;
    bool non_confluent = false;
    // witness: graph plus the two trial indices whose reductions differ
    std::string witness_graph6;
    std::uint64_t seed = 0, trial1 = 0, trial2 = 0;
    Outcome out1, out2;
    std::size_t graphs_tested = 0;
};

// {a, b, Deg0} without repeats; witnesses replay with reduce_outcome(g, pair_rules(a, b), seed, trial)
std::vector<Rule> pair_rules(Rule a, Rule b);
// Stops at the first witness.
ConfluenceVerdict test_pair(Rule a, Rule b, const std::vector<Graph>& graphs, std::size_t trials, std::uint64_t seed,
                            const RuleConfig& cfg = {});

std::string emit_matrix_text(const std::vector<Rule>& rules, const std::vector<ConfluenceVerdict>& verdicts);
std::string emit_matrix_json(const std::vector<Rule>& rules, const std::vector<ConfluenceVerdict>& verdicts);

}  // namespace vck
