#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

enum class Rule : std::uint8_t {
    Deg0, Deg1, Deg2Fold, Deg3IS, DegGtK, Dom, Unconf, UnconfKappa, Desk, CN, OEDel, Struct, Magnet, LP,
    Triangle,
    Undeg2, Undeg3, Uncn, Undom, Ununconf, OEIns,
};

inline constexpr Rule kAllRules[] = {
    Rule::Deg0, Rule::Deg1, Rule::Deg2Fold, Rule::Deg3IS, Rule::DegGtK, Rule::Dom, Rule::Unconf,
    Rule::UnconfKappa, Rule::Desk, Rule::CN, Rule::OEDel, Rule::Struct, Rule::Magnet, Rule::LP,
    Rule::Triangle, Rule::Undeg2, Rule::Undeg3, Rule::Uncn, Rule::Undom, Rule::Ununconf, Rule::OEIns};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view s);
inline bool is_forward(Rule r) { return r < Rule::Undeg2; }
inline bool is_backward(Rule r) { return !is_forward(r); }

// Table 1 forward column (Unconfined there is the kappa variant).
std::vector<Rule> table1_forward_rules();
std::vector<Rule> backward_rules();
// Deg1, Deg2, Deg3, Unconf, CN, LP, Struct, Magnet, OEDel
std::vector<Rule> kernelize_preset();
// parses "deg1,deg2,..." or the names "table1", "preset", "backward"
std::vector<Rule> parse_rule_list(std::string_view s);

struct RuleConfig {
    int kappa = 4;
    bool kappa_literal = false;         // drop the independence requirement on X (unsafe, see tests)
    bool unguarded_struction = false;
    std::size_t struction_all_orders_max_degree = 3;
    std::size_t undeg2_max_degree = 8;  // enumeration cap for Find
    std::size_t subset_cap = 4;         // |S| cap for Undom / Ununconf enumeration
    std::size_t undeg3_max_optional = 3;
};

struct Site {
    Rule rule = Rule::Deg0;
    VertexList anchors;                  // ordered, rule specific
    std::vector<VertexList> groups;      // rule specific choice data
    auto operator<=>(const Site&) const = default;
};

struct StaleSite : Error { using Error::Error; };

std::string to_string(const Site& s);

}  // namespace vck
