#pragma once

#include <optional>
#include <vector>

#include "vck/graph.hpp"
#include "vck/rng.hpp"
#include "vck/rules.hpp"

namespace vck {

// Site layouts:
//   Undeg2   anchors {v}        groups {A only, B only, both}
//   Undeg3   anchors {a, b, c}  groups {{u, x} ...} optional deletion of edge u-x for u adjacent to all of a,b,c
//   Uncn     anchors {a, b}
//   Undom    anchors {v}        groups {S}
//   Ununconf anchors {}         groups {S}
//   OEIns    anchors {a, b, c}  (a < b, c adjacent to exactly one of them)
bool backward_site_valid(const Instance& inst, const Site& site, const RuleConfig& cfg);
std::vector<Site> find_backward_sites(const Instance& inst, Rule rule, const RuleConfig& cfg,
                                      const VertexSet* scope = nullptr);
std::optional<Site> sample_backward_site(const Instance& inst, Rule rule, Rng& rng,
                                         const VertexSet* scope = nullptr);

struct BackwardResult {
    std::vector<VertexList> created;
    Site restore;
};
BackwardResult apply_backward(Instance& inst, const Site& site, const RuleConfig& cfg);

}  // namespace vck
