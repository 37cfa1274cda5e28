#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "vck/engine.hpp"
#include "vck/rng.hpp"
#include "vck/rules.hpp"

namespace vck {

struct FindConfig {
    std::size_t max_depth = 2;
    std::vector<Rule> forward = table1_forward_rules();
    std::vector<Rule> backward = backward_rules();
    double time_limit = 60.0;  // seconds; 0 returns nothing
    bool stop_at_first = false;
    // enumeration caps used while searching (smaller than the rule defaults)
    std::size_t undeg2_max_degree = 6;
    std::size_t subset_cap = 2;
};

struct FoundSequence {
    VertexId root = 0;
    std::vector<Rule> rules;
    Trace records;
    std::int64_t dn = 0, dk = 0;
    Instance result;
};

// accept iff neither n nor k grows and at least one of them shrinks
inline bool accept_change(std::int64_t dn, std::int64_t dk) { return dn <= 0 && dk <= 0 && (dn < 0 || dk < 0); }

std::vector<FoundSequence> find(const Instance& inst, const FindConfig& cfg, const RuleConfig& rules = {});

struct SearchResult {
    Instance final;
    Trace trace;
    std::vector<std::string> log;  // one JSON object per iteration / accepted sequence
    std::size_t iterations = 0, accepted = 0;
};

// exhaustive fixed-order forward reduction interleaved with Find; applies the first accepted sequence
SearchResult find_and_reduce(const Instance& inst, const FindConfig& cfg, const RuleConfig& rules = {},
                             const std::vector<Rule>& preset = kernelize_preset());

struct InflateDeflateConfig {
    double alpha = 0.1;
    std::vector<Rule> forward = table1_forward_rules();
    std::vector<Rule> backward = backward_rules();
    std::size_t iterations = std::numeric_limits<std::size_t>::max();
    double time_limit = 60.0;
    std::size_t radius = 0;  // 0: global variant; otherwise local with this ball radius
    bool initial_deflate = true;
    std::size_t max_failed_samples = 200;  // per iteration, while inflating
};

SearchResult inflate_deflate(const Instance& inst, const InflateDeflateConfig& cfg, Rng& rng,
                             const RuleConfig& rules = {});
SearchResult local_inflate_deflate(const Instance& inst, InflateDeflateConfig cfg, Rng& rng,
                                   const RuleConfig& rules = {});

}  // namespace vck
