#include "vck/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vck {

namespace {
constexpr std::string_view kNames[] = {
    "Deg0", "Deg1", "Deg2", "Deg3", "DegGtK", "Dom", "Unconf", "UnconfKappa", "Desk", "CN", "OEDel",
    "Struct", "Magnet", "LP", "Triangle", "Undeg2", "Undeg3", "Uncn", "Undom", "Ununconf", "OEIns"};

std::string lower(std::string_view s) {
    std::string r(s);
    for (char& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return r;
}
}  // namespace

std::string_view rule_name(Rule r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> parse_rule(std::string_view s) {
    std::string l = lower(s);
    for (Rule r : kAllRules)
        if (lower(rule_name(r)) == l) return r;
    if (l == "deg2fold") return Rule::Deg2Fold;
    if (l == "deg3is") return Rule::Deg3IS;
    if (l == "oe_delete") return Rule::OEDel;
    if (l == "oe_insert") return Rule::OEIns;
    return std::nullopt;
}

std::vector<Rule> table1_forward_rules() {
    return {Rule::Deg0, Rule::Deg1, Rule::Deg2Fold, Rule::Deg3IS, Rule::Dom, Rule::UnconfKappa,
            Rule::Desk, Rule::CN,   Rule::OEDel,    Rule::Struct, Rule::Magnet, Rule::LP};
}

std::vector<Rule> backward_rules() {
    return {Rule::Undeg2, Rule::Undeg3, Rule::Uncn, Rule::Undom, Rule::Ununconf, Rule::OEIns};
}

std::vector<Rule> kernelize_preset() {
    return {Rule::Deg1, Rule::Deg2Fold, Rule::Deg3IS, Rule::UnconfKappa, Rule::CN,
            Rule::LP,   Rule::Struct,   Rule::Magnet, Rule::OEDel};
}

std::vector<Rule> parse_rule_list(std::string_view s) {
    std::vector<Rule> out;
    std::stringstream ss{std::string(s)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::string l = lower(tok);
        std::vector<Rule> add;
        if (l == "table1" || l == "forward") add = table1_forward_rules();
        else if (l == "preset") add = kernelize_preset();
        else if (l == "backward") add = backward_rules();
        else if (auto r = parse_rule(tok)) add = {*r};
        else throw InvalidArgument("unknown rule: " + tok);
        for (Rule r : add)
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

std::string to_string(const Site& s) {
    std::ostringstream os;
    os << rule_name(s.rule) << "(";
    for (std::size_t i = 0; i < s.anchors.size(); ++i) os << (i ? "," : "") << s.anchors[i];
    for (const auto& g : s.groups) {
        os << ";{";
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << "}";
    }
    os << ")";
    return os.str();
}

}  // namespace vck
