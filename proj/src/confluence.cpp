#include "vck/confluence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "vck/engine.hpp"
#include "vck/graph_io.hpp"

namespace vck {

std::vector<Graph> enumerate_graphs(std::size_t max_n) {
    std::vector<Graph> out;
    if (max_n == 0) return out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(level[0]);
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<CanonicalForm, Graph> next;
        for (const Graph& g : level) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph h = g;
                VertexId v = h.add_vertex();
                for (VertexId u = 0; u + 1 < n; ++u)
                    if (mask >> u & 1) h.add_edge(u, v);
                CanonicalForm f = canonical_form(h);
                if (!next.count(f)) next.emplace(std::move(f), std::move(h));
            }
        }
        level.clear();
        for (auto& [f, g] : next) level.push_back(std::move(g));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Outcome reduce_outcome(const Graph& g, const std::vector<Rule>& rules, std::uint64_t seed, std::uint64_t trial,
                       const RuleConfig& cfg) {
    Engine e(Instance{g, 0, Mode::Counting}, cfg);
    Rng rng = Rng::derive(seed, trial);
    e.deflate(rules, rng);
    return {canonical_form(e.graph()), e.instance().k, e.graph().num_vertices(), e.graph().num_edges()};
}

std::vector<Rule> pair_rules(Rule a, Rule b) {
    std::vector<Rule> rules{a};
    if (b != a) rules.push_back(b);
    if (a != Rule::Deg0 && b != Rule::Deg0) rules.push_back(Rule::Deg0);
    return rules;
}

ConfluenceVerdict test_pair(Rule a, Rule b, const std::vector<Graph>& graphs, std::size_t trials, std::uint64_t seed,
                            const RuleConfig& cfg) {
    ConfluenceVerdict v;
    v.a = a;
    v.b = b;
    std::vector<Rule> rules = pair_rules(a, b);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        ++v.graphs_tested;
        std::uint64_t gseed = Rng::mix(seed ^ Rng::mix(gi));
        Outcome first = reduce_outcome(graphs[gi], rules, gseed, 0, cfg);
        for (std::size_t t = 1; t < trials; ++t) {
            Outcome o = reduce_outcome(graphs[gi], rules, gseed, t, cfg);
            if (o == first) continue;
            v.non_confluent = true;
            v.witness_graph6 = emit_graph6(graphs[gi]);
            v.seed = gseed;
            v.trial1 = 0;
            v.trial2 = t;
            v.out1 = std::move(first);
            v.out2 = std::move(o);
            return v;
        }
    }
    return v;
}

namespace {

const ConfluenceVerdict* lookup(const std::vector<ConfluenceVerdict>& vs, Rule a, Rule b) {
    for (const auto& v : vs)
        if ((v.a == a && v.b == b) || (v.a == b && v.b == a)) return &v;
    return nullptr;
}

}  // namespace

std::string emit_matrix_text(const std::vector<Rule>& rules, const std::vector<ConfluenceVerdict>& verdicts) {
    std::size_t w = 4;
    for (Rule r : rules) w = std::max(w, rule_name(r).size() + 1);
    std::ostringstream os;
    os << std::string(w, ' ');
    for (Rule r : rules) os << std::string(w - rule_name(r).size(), ' ') << rule_name(r);
    os << '\n';
    for (Rule a : rules) {
        os << rule_name(a) << std::string(w - rule_name(a).size(), ' ');
        for (Rule b : rules) {
            const auto* v = lookup(verdicts, a, b);
            std::string cell = !v ? "." : v->non_confluent ? "X" : "-";
            os << std::string(w - 1, ' ') << cell;
        }
        os << '\n';
    }
    os << "X = non-confluent (witness found), - = no counterexample found, . = not tested\n";
    return os.str();
}

std::string emit_matrix_json(const std::vector<Rule>& rules, const std::vector<ConfluenceVerdict>& verdicts) {
    using nlohmann::json;
    json names = json::array();
    for (Rule r : rules) names.push_back(rule_name(r));
    json matrix = json::array();
    for (Rule a : rules) {
        json row = json::array();
        for (Rule b : rules) {
            const auto* v = lookup(verdicts, a, b);
            row.push_back(!v ? "untested" : v->non_confluent ? "non_confluent" : "no_counterexample_found");
        }
        matrix.push_back(row);
    }
    json ws = json::array();
    for (const auto& v : verdicts) {
        if (!v.non_confluent) continue;
        ws.push_back({{"a", rule_name(v.a)},
                      {"b", rule_name(v.b)},
                      {"graph6", v.witness_graph6},
                      {"seed", v.seed},
                      {"trials", {v.trial1, v.trial2}},
                      {"outcomes", {{{"n", v.out1.n}, {"m", v.out1.m}, {"k", v.out1.k}},
                                    {{"n", v.out2.n}, {"m", v.out2.m}, {"k", v.out2.k}}}}});
    }
    json j = {{"rules", names}, {"matrix", matrix}, {"witnesses", ws}};
    return j.dump(2) + "\n";
}

}  // namespace vck
