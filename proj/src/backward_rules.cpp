#include "vck/backward_rules.hpp"

#include <algorithm>

#include "vck/forward_rules.hpp"
#include "vck/unconfined.hpp"

namespace vck {

namespace {

bool live(const Graph& g, const VertexList& s) {
    return std::all_of(s.begin(), s.end(), [&](VertexId x) { return g.contains(x); });
}

bool is_sorted_set(const VertexList& s) {
    return std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end();
}

VertexList abc(const Site& s) { return sorted({s.anchors[0], s.anchors[1], s.anchors[2]}); }

bool undeg3_base_valid(const Graph& g, VertexId a, VertexId b, VertexId c) {
    if (a == b || b == c || a == c || !live(g, {a, b, c})) return false;
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || g.has_edge(a, c)) return false;
    VertexList s = sorted({a, b, c});
    for (VertexId u : g.neighborhood(s))
        if (set_intersection(g.neighbors(u), s).size() < 2) return false;
    return true;
}

VertexList full_neighbors(const Graph& g, const VertexList& s) {
    VertexList out;
    for (VertexId u : g.neighborhood(s))
        if (set_intersection(g.neighbors(u), s).size() == 3) out.push_back(u);
    return out;
}

bool oeins_valid(const Graph& g, VertexId a, VertexId b, VertexId c) {
    if (a == b || a == c || b == c || !live(g, {a, b, c})) return false;
    if (g.has_edge(a, b)) return false;
    if (g.has_edge(c, a) == g.has_edge(c, b)) return false;
    VertexList rest = set_difference(g.neighbors(c), sorted({a, b}));
    return includes(set_union(g.neighbors(a), g.neighbors(b)), rest);
}

bool ununconf_valid(const Graph& g, const VertexList& s) {
    if (s.empty() || !is_sorted_set(s) || !live(g, s)) return false;
    AugmentedView view(g, g.next_id(), s);
    return unconfined_check(view, g.next_id()).yes;
}

template <class F>
void for_each_subset(const VertexList& pool, std::size_t max_size, F&& f) {
    VertexList cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty()) f(cur);
        if (cur.size() == max_size) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

VertexList scope_vertices(const Graph& g, const VertexSet* scope) {
    if (!scope) return g.vertex_list();
    VertexList r;
    for (VertexId x : *scope)
        if (g.contains(x)) r.push_back(x);
    return r;
}

std::vector<VertexList> undeg3_options(const Graph& g, VertexId a, VertexId b, VertexId c, std::size_t cap) {
    VertexList s = sorted({a, b, c});
    VertexList full = full_neighbors(g, s);
    std::vector<VertexList> out{{}};
    if (full.size() > cap) return out;
    for (VertexId u : full) {
        std::vector<VertexList> next;
        for (const auto& o : out) {
            next.push_back(o);
            for (VertexId x : s) {
                VertexList e = o;
                e.push_back(u);
                e.push_back(x);
                next.push_back(e);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<VertexList> pairs_from_flat(const VertexList& flat) {
    std::vector<VertexList> g;
    for (std::size_t i = 0; i + 1 < flat.size(); i += 2) g.push_back({flat[i], flat[i + 1]});
    return g;
}

}  // namespace

bool backward_site_valid(const Instance& inst, const Site& s, const RuleConfig&) {
    const Graph& g = inst.graph;
    switch (s.rule) {
        case Rule::Undeg2: {
            if (s.anchors.size() != 1 || s.groups.size() != 3 || !g.contains(s.anchors[0])) return false;
            VertexList all;
            for (const auto& grp : s.groups) {
                if (!is_sorted_set(grp)) return false;
                all.insert(all.end(), grp.begin(), grp.end());
            }
            std::sort(all.begin(), all.end());
            return all == g.neighbors(s.anchors[0]);
        }
        case Rule::Undeg3: {
            if (s.anchors.size() != 3) return false;
            if (!undeg3_base_valid(g, s.anchors[0], s.anchors[1], s.anchors[2])) return false;
            VertexList full = full_neighbors(g, abc(s));
            VertexSet used;
            for (const auto& e : s.groups) {
                if (e.size() != 2 || !contains_sorted(full, e[0]) || !contains_sorted(abc(s), e[1])) return false;
                if (!used.insert(e[0]).second) return false;
            }
            return true;
        }
        case Rule::Uncn:
            return s.anchors.size() == 2 && s.anchors[0] < s.anchors[1] && live(g, s.anchors) &&
                   g.has_edge(s.anchors[0], s.anchors[1]);
        case Rule::Undom: {
            if (s.anchors.size() != 1 || s.groups.size() != 1 || !g.contains(s.anchors[0])) return false;
            const auto& S = s.groups[0];
            return is_sorted_set(S) && live(g, S) && !contains_sorted(S, s.anchors[0]);
        }
        case Rule::Ununconf:
            return s.anchors.empty() && s.groups.size() == 1 && ununconf_valid(g, s.groups[0]);
        case Rule::OEIns:
            return s.anchors.size() == 3 && s.anchors[0] < s.anchors[1] &&
                   oeins_valid(g, s.anchors[0], s.anchors[1], s.anchors[2]);
        default: return false;
    }
}

std::vector<Site> find_backward_sites(const Instance& inst, Rule rule, const RuleConfig& cfg,
                                      const VertexSet* scope) {
    const Graph& g = inst.graph;
    std::vector<Site> out;
    switch (rule) {
        case Rule::Undeg2:
            for (VertexId v : scope_vertices(g, scope)) {
                const VertexList& nb = g.neighbors(v);
                if (nb.size() > cfg.undeg2_max_degree) continue;
                std::vector<int> asg(nb.size(), 0);
                for (;;) {
                    // skip mirror images: the first neighbor not sent to both sides goes to A
                    auto first = std::find_if(asg.begin(), asg.end(), [](int x) { return x != 2; });
                    if (first == asg.end() || *first == 0) {
                        std::vector<VertexList> grp(3);
                        for (std::size_t i = 0; i < nb.size(); ++i) grp[asg[i]].push_back(nb[i]);
                        out.push_back({rule, {v}, grp});
                    }
                    std::size_t i = 0;
                    while (i < asg.size() && asg[i] == 2) asg[i++] = 0;
                    if (i == asg.size()) break;
                    ++asg[i];
                }
            }
            break;
        case Rule::Undeg3:
            for (VertexId b : scope_candidates(g, scope, 1)) {
                const VertexList& nb = g.neighbors(b);
                for (VertexId a : nb)
                    for (VertexId c : nb) {
                        if (a == c || !undeg3_base_valid(g, a, b, c)) continue;
                        for (const auto& opt : undeg3_options(g, a, b, c, cfg.undeg3_max_optional)) {
                            Site s{rule, {a, b, c}, pairs_from_flat(opt)};
                            if (site_touches(s, scope)) out.push_back(s);
                        }
                    }
            }
            break;
        case Rule::Uncn:
            for (VertexId a : scope_candidates(g, scope, 1))
                for (VertexId b : g.neighbors(a))
                    if (a < b) {
                        Site s{rule, {a, b}, {}};
                        if (site_touches(s, scope)) out.push_back(s);
                    }
            break;
        case Rule::Undom:
            for (VertexId v : scope_vertices(g, scope)) {
                VertexList pool = set_difference(scope_vertices(g, scope), g.closed_neighborhood(v));
                out.push_back({rule, {v}, {{}}});
                for_each_subset(pool, cfg.subset_cap, [&](const VertexList& s) { out.push_back({rule, {v}, {s}}); });
            }
            break;
        case Rule::Ununconf:
            for_each_subset(scope_vertices(g, scope), cfg.subset_cap, [&](const VertexList& s) {
                if (ununconf_valid(g, s)) out.push_back({rule, {}, {s}});
            });
            break;
        case Rule::OEIns:
            for (VertexId c : scope_candidates(g, scope, 1))
                for (VertexId b : g.neighbors(c)) {
                    VertexList q = set_difference(g.neighbors(c), g.closed_neighborhood(b));
                    VertexList pool;
                    if (!q.empty()) {
                        pool = g.neighbors(q[0]);
                        for (VertexId x : q) pool = set_intersection(pool, g.neighbors(x));
                    } else {
                        pool = scope_vertices(g, scope);
                    }
                    pool = set_difference(pool, set_union(g.closed_neighborhood(b), g.closed_neighborhood(c)));
                    for (VertexId a : pool) {
                        Site s{rule, {std::min(a, b), std::max(a, b), c}, {}};
                        if (oeins_valid(g, a, b, c) && site_touches(s, scope)) out.push_back(s);
                    }
                }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        default: throw InvalidArgument("not a backward rule: " + std::string(rule_name(rule)));
    }
    return out;
}

std::optional<Site> sample_backward_site(const Instance& inst, Rule rule, Rng& rng, const VertexSet* scope) {
    const Graph& g = inst.graph;
    VertexList pool = scope_vertices(g, scope);
    if (pool.empty()) return std::nullopt;
    auto in_scope = [&](VertexId x) { return !scope || scope->count(x); };
    constexpr int kAttempts = 20;
    switch (rule) {
        case Rule::Undeg2: {
            VertexId v = rng.pick(pool);
            std::vector<VertexList> grp(3);
            for (VertexId x : g.neighbors(v)) grp[rng.below(3)].push_back(x);
            return Site{rule, {v}, grp};
        }
        case Rule::Undeg3:
            for (int t = 0; t < kAttempts; ++t) {
                VertexId b = rng.pick(pool);
                const VertexList& nb = g.neighbors(b);
                if (nb.size() < 2) continue;
                VertexId a = rng.pick(nb), c = rng.pick(nb);
                if (!undeg3_base_valid(g, a, b, c)) continue;
                VertexList s = sorted({a, b, c});
                std::vector<VertexList> opt;
                for (VertexId u : full_neighbors(g, s)) {
                    std::size_t r = rng.below(4);
                    if (r < 3) opt.push_back({u, s[r]});
                }
                return Site{rule, {a, b, c}, opt};
            }
            return std::nullopt;
        case Rule::Uncn:
            for (int t = 0; t < kAttempts; ++t) {
                VertexId a = rng.pick(pool);
                if (g.degree(a) == 0) continue;
                VertexId b = rng.pick(g.neighbors(a));
                return Site{rule, {std::min(a, b), std::max(a, b)}, {}};
            }
            return std::nullopt;
        case Rule::Undom: {
            VertexId v = rng.pick(pool);
            VertexList cand;
            for (VertexId x : set_difference(g.ball(v, 2), g.closed_neighborhood(v)))
                if (in_scope(x)) cand.push_back(x);
            VertexList s = sorted(rng.sample(cand, rng.geometric(1.0 / 3.0)));
            return Site{rule, {v}, {s}};
        }
        case Rule::Ununconf:
            for (int t = 0; t < kAttempts; ++t) {
                VertexId r = rng.pick(pool);
                VertexList cand;
                for (VertexId x : g.ball(r, 2))
                    if (in_scope(x)) cand.push_back(x);
                VertexList s = sorted(rng.sample(cand, 1 + rng.geometric(0.5)));
                if (ununconf_valid(g, s)) return Site{rule, {}, {s}};
            }
            return std::nullopt;
        case Rule::OEIns:
            for (int t = 0; t < kAttempts; ++t) {
                VertexId c = rng.pick(pool);
                if (g.degree(c) == 0) continue;
                VertexId b = rng.pick(g.neighbors(c));
                VertexList q = set_difference(g.neighbors(c), g.closed_neighborhood(b));
                VertexList cand;
                if (!q.empty()) {
                    cand = g.neighbors(q[0]);
                    for (VertexId x : q) cand = set_intersection(cand, g.neighbors(x));
                } else {
                    cand = g.ball(b, 2);
                }
                VertexList blocked = set_union(g.closed_neighborhood(b), g.closed_neighborhood(c));
                cand = set_difference(cand, blocked);
                if (cand.empty() && q.empty()) cand = set_difference(g.vertex_list(), blocked);
                std::erase_if(cand, [&](VertexId x) { return !in_scope(x); });
                if (cand.empty()) continue;
                VertexId a = rng.pick(cand);
                if (oeins_valid(g, a, b, c)) return Site{rule, {std::min(a, b), std::max(a, b), c}, {}};
            }
            return std::nullopt;
        default: throw InvalidArgument("not a backward rule: " + std::string(rule_name(rule)));
    }
}

BackwardResult apply_backward(Instance& inst, const Site& s, const RuleConfig& cfg) {
    if (!backward_site_valid(inst, s, cfg)) throw StaleSite("stale site " + to_string(s));
    Graph& g = inst.graph;
    BackwardResult res;
    switch (s.rule) {
        case Rule::Undeg2: {
            VertexId v = s.anchors[0];
            VertexList nb = g.neighbors(v);
            for (VertexId x : nb) g.remove_edge(v, x);
            VertexId a = g.add_vertex(), b = g.add_vertex();
            for (VertexId x : s.groups[0]) g.add_edge(a, x);
            for (VertexId x : s.groups[1]) g.add_edge(b, x);
            for (VertexId x : s.groups[2]) {
                g.add_edge(a, x);
                g.add_edge(b, x);
            }
            g.add_edge(v, a);
            g.add_edge(v, b);
            inst.k += 1;
            res.created = {{a, b}};
            res.restore = {Rule::Deg2Fold, {v, a, b}, {}};
            break;
        }
        case Rule::Undeg3: {
            VertexId a = s.anchors[0], b = s.anchors[1], c = s.anchors[2];
            VertexList set = sorted({a, b, c});
            VertexList around = g.neighborhood(set);
            g.remove_edge(a, b);
            g.remove_edge(b, c);
            for (VertexId u : around) {
                bool ua = g.has_edge(u, a), ub = g.has_edge(u, b), uc = g.has_edge(u, c);
                if (ua && ub && uc) {
                    for (const auto& e : s.groups)
                        if (e[0] == u) g.remove_edge(u, e[1]);
                } else if (!ua) {
                    g.remove_edge(u, b);
                } else if (!ub) {
                    g.remove_edge(u, c);
                } else {
                    g.remove_edge(u, a);
                }
            }
            VertexId v = g.add_vertex();
            for (VertexId x : set) g.add_edge(v, x);
            res.created = {{v}};
            res.restore = {Rule::Deg3IS, {v, a, b, c}, {}};
            break;
        }
        case Rule::Uncn: {
            VertexId a = s.anchors[0], b = s.anchors[1];
            VertexList common = set_intersection(g.neighbors(a), g.neighbors(b));
            VertexId v = g.add_vertex(), c = g.add_vertex();
            g.add_edge(v, a);
            g.add_edge(v, b);
            g.add_edge(v, c);
            for (VertexId x : common) {
                g.remove_edge(a, x);
                g.remove_edge(b, x);
                g.add_edge(c, x);
            }
            inst.k += 1;
            res.created = {{v, c}};
            res.restore = {Rule::CN, {v}, {{a, b}, {c}}};
            break;
        }
        case Rule::Undom: {
            VertexId v = s.anchors[0];
            VertexList targets = set_union(s.groups[0], g.closed_neighborhood(v));
            VertexId u = g.add_vertex();
            for (VertexId x : targets) g.add_edge(u, x);
            inst.k += 1;
            res.created = {{u}};
            res.restore = {Rule::Dom, {u, v}, {}};
            break;
        }
        case Rule::Ununconf: {
            VertexId v = g.add_vertex();
            for (VertexId x : s.groups[0]) g.add_edge(v, x);
            inst.k += 1;
            res.created = {{v}};
            res.restore = {Rule::Unconf, {v}, {}};
            break;
        }
        case Rule::OEIns:
            g.add_edge(s.anchors[0], s.anchors[1]);
            res.restore = {Rule::OEDel, s.anchors, {}};
            break;
        default: throw InvalidArgument("not a backward rule");
    }
    return res;
}

}  // namespace vck
