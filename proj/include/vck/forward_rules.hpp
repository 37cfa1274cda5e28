#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vck/graph.hpp"
#include "vck/rules.hpp"

namespace vck {

std::vector<Site> find_forward_sites(const Instance& inst, Rule rule, const RuleConfig& cfg,
                                     const VertexSet* scope = nullptr);
bool forward_site_valid(const Instance& inst, const Site& site, const RuleConfig& cfg);
// Mutates the instance; returns rule specific created ids. Throws StaleSite.
std::vector<VertexList> apply_forward(Instance& inst, const Site& site, const RuleConfig& cfg);

// (C1, C2) per the star-forest construction, or none.
std::optional<std::pair<VertexList, VertexList>> find_cn_partition(const Graph& g, VertexId v);
bool cn_partition_valid(const Graph& g, VertexId v, const VertexList& c1, const VertexList& c2);
bool buss_no_instance_check(const Instance& inst);

// W pairs (i, j), 0-based positions in the ordering, lexicographic
std::vector<std::pair<std::size_t, std::size_t>> struction_pairs(const Graph& g, const VertexList& order);

// vertices whose sites may intersect scope when anchored within `radius`
VertexList scope_candidates(const Graph& g, const VertexSet* scope, std::size_t radius);
bool site_touches(const Site& s, const VertexSet* scope);

}  // namespace vck
