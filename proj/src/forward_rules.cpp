#include "vck/forward_rules.hpp"

#include <algorithm>
#include <map>

#include "vck/lp.hpp"
#include "vck/unconfined.hpp"

namespace vck {

VertexList scope_candidates(const Graph& g, const VertexSet* scope, std::size_t radius) {
    if (!scope) return g.vertex_list();
    VertexSet out;
    for (VertexId x : *scope) {
        if (!g.contains(x)) continue;
        for (VertexId y : g.ball(x, radius)) out.insert(y);
    }
    return {out.begin(), out.end()};
}

bool site_touches(const Site& s, const VertexSet* scope) {
    if (!scope) return true;
    for (VertexId x : s.anchors)
        if (scope->count(x)) return true;
    for (const auto& grp : s.groups)
        for (VertexId x : grp)
            if (scope->count(x)) return true;
    return false;
}

namespace {

bool all_live(const Graph& g, const Site& s) {
    for (VertexId x : s.anchors)
        if (!g.contains(x)) return false;
    for (const auto& grp : s.groups)
        for (VertexId x : grp)
            if (!g.contains(x)) return false;
    return true;
}

bool distinct(VertexList v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// ---- validity checks -------------------------------------------------------

bool valid_deg0(const Graph& g, const Site& s) { return s.anchors.size() == 1 && g.degree(s.anchors[0]) == 0; }

bool valid_deg1(const Graph& g, const Site& s) {
    if (s.anchors.size() != 2) return false;
    return g.degree(s.anchors[0]) == 1 && g.neighbors(s.anchors[0])[0] == s.anchors[1];
}

bool valid_deg2(const Graph& g, const Site& s) {
    if (s.anchors.size() != 3) return false;
    auto [v, a, b] = std::tuple(s.anchors[0], s.anchors[1], s.anchors[2]);
    return g.degree(v) == 2 && g.neighbors(v) == VertexList{a, b} && !g.has_edge(a, b);
}

bool valid_triangle(const Graph& g, const Site& s) {
    if (s.anchors.size() != 3) return false;
    auto [v, a, b] = std::tuple(s.anchors[0], s.anchors[1], s.anchors[2]);
    return g.degree(v) == 2 && g.neighbors(v) == VertexList{a, b} && g.has_edge(a, b);
}

bool valid_deg3(const Graph& g, const Site& s) {
    if (s.anchors.size() != 4 || !distinct(s.anchors)) return false;
    VertexId v = s.anchors[0];
    VertexList nb = sorted({s.anchors[1], s.anchors[2], s.anchors[3]});
    return g.degree(v) == 3 && g.neighbors(v) == nb && g.is_independent_set(nb);
}

bool valid_deggtk(const Instance& inst, const Site& s) {
    return inst.mode == Mode::Budget && s.anchors.size() == 1 &&
           static_cast<std::int64_t>(inst.graph.degree(s.anchors[0])) > inst.k;
}

bool dominates(const Graph& g, VertexId u, VertexId v) {
    if (u == v || !g.has_edge(u, v)) return false;
    return includes(g.closed_neighborhood(u), g.closed_neighborhood(v));
}

bool valid_dom(const Graph& g, const Site& s) {
    return s.anchors.size() == 2 && dominates(g, s.anchors[0], s.anchors[1]);
}

struct Desk {
    VertexList a, b, na, nb;
};

std::optional<Desk> desk_parts(const Graph& g, const VertexList& u) {
    if (u.size() != 4 || !distinct(u)) return std::nullopt;
    for (int i = 0; i < 4; ++i)
        if (!g.has_edge(u[i], u[(i + 1) % 4])) return std::nullopt;
    if (g.has_edge(u[0], u[2]) || g.has_edge(u[1], u[3])) return std::nullopt;
    Desk d;
    d.a = sorted({u[0], u[2]});
    d.b = sorted({u[1], u[3]});
    d.na = set_difference(g.neighborhood(d.a), d.b);
    d.nb = set_difference(g.neighborhood(d.b), d.a);
    if (!set_intersection(d.na, d.nb).empty() || d.na.size() > 2 || d.nb.size() > 2) return std::nullopt;
    return d;
}

bool valid_oedel(const Graph& g, const Site& s) {
    if (s.anchors.size() != 3 || !distinct(s.anchors)) return false;
    auto [a, b, c] = std::tuple(s.anchors[0], s.anchors[1], s.anchors[2]);
    if (!g.has_edge(a, b)) return false;
    if (g.has_edge(c, a) == g.has_edge(c, b)) return false;
    return includes(set_union(g.neighbors(a), g.neighbors(b)), g.neighbors(c));
}

bool valid_struct(const Graph& g, const Site& s, const RuleConfig& cfg) {
    if (s.anchors.empty() || !distinct(s.anchors)) return false;
    VertexId v = s.anchors[0];
    VertexList order(s.anchors.begin() + 1, s.anchors.end());
    if (g.neighbors(v) != sorted(order)) return false;
    if (cfg.unguarded_struction) return true;
    return struction_pairs(g, order).size() <= order.size();
}

struct MagnetParts {
    VertexList a, b, c;
};

std::optional<MagnetParts> magnet_parts(const Graph& g, VertexId a, VertexId b) {
    if (a == b || !g.has_edge(a, b)) return std::nullopt;
    MagnetParts p;
    p.a = set_difference(g.neighbors(a), g.closed_neighborhood(b));
    p.b = set_difference(g.neighbors(b), g.closed_neighborhood(a));
    p.c = set_intersection(g.neighbors(a), g.neighbors(b));
    for (VertexId x : p.a)
        for (VertexId y : p.b)
            if (!g.has_edge(x, y)) return std::nullopt;
    return p;
}

bool valid_lp(const Graph& g, const Site& s) {
    if (s.groups.size() != 2) return false;
    if (s.groups[0].empty() && s.groups[1].empty()) return false;
    LpSolution sol = solve_lp_extreme(g);
    return sol.v0 == s.groups[0] && sol.v1 == s.groups[1];
}

// ---- enumeration -----------------------------------------------------------

void push_if(std::vector<Site>& out, Site s, const VertexSet* scope) {
    if (site_touches(s, scope)) out.push_back(std::move(s));
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> struction_pairs(const Graph& g, const VertexList& order) {
    std::vector<std::pair<std::size_t, std::size_t>> w;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!g.has_edge(order[i], order[j])) w.emplace_back(i, j);
    return w;
}

bool cn_partition_valid(const Graph& g, VertexId v, const VertexList& c1, const VertexList& c2) {
    if (!g.contains(v)) return false;
    if (set_union(c1, c2) != g.neighbors(v) || !set_intersection(c1, c2).empty()) return false;
    if (c1.size() < c2.size() || !g.is_clique(c1) || !g.is_clique(c2)) return false;
    for (VertexId x : c1) {
        std::size_t missing = 0;
        for (VertexId y : c2)
            if (!g.has_edge(x, y)) ++missing;
        if (missing != 1) return false;
    }
    return true;
}

std::optional<std::pair<VertexList, VertexList>> find_cn_partition(const Graph& g, VertexId v) {
    const VertexList& nb = g.neighbors(v);
    Graph h = g.complement_of_induced(nb);
    VertexList c1, c2;
    VertexSet seen;
    for (VertexId x : nb) {
        if (seen.count(x)) continue;
        VertexList comp = h.ball(x, nb.size());
        for (VertexId y : comp) seen.insert(y);
        std::size_t edges = 0;
        VertexId center = comp[0];
        for (VertexId y : comp) {
            edges += h.degree(y);
            if (h.degree(y) > h.degree(center)) center = y;  // first max wins: smallest id
        }
        edges /= 2;
        if (edges != comp.size() - 1 || h.degree(center) != comp.size() - 1) return std::nullopt;
        c2.push_back(center);
        for (VertexId y : comp)
            if (y != center) c1.push_back(y);
    }
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1.size() < c2.size()) return std::nullopt;
    return std::pair{c1, c2};
}

bool buss_no_instance_check(const Instance& inst) {
    if (inst.k < 0) return true;
    auto k = static_cast<std::uint64_t>(inst.k);
    return inst.graph.num_vertices() > k * k + k || inst.graph.num_edges() > k * k;
}

bool forward_site_valid(const Instance& inst, const Site& s, const RuleConfig& cfg) {
    const Graph& g = inst.graph;
    if (!is_forward(s.rule) || !all_live(g, s)) return false;
    switch (s.rule) {
        case Rule::Deg0: return valid_deg0(g, s);
        case Rule::Deg1: return valid_deg1(g, s);
        case Rule::Deg2Fold: return valid_deg2(g, s);
        case Rule::Deg3IS: return valid_deg3(g, s);
        case Rule::DegGtK: return valid_deggtk(inst, s);
        case Rule::Dom: return valid_dom(g, s);
        case Rule::Unconf: return s.anchors.size() == 1 && unconfined_check(g, s.anchors[0]).yes;
        case Rule::UnconfKappa:
            return s.anchors.size() == 1 &&
                   unconfined_kappa_check(g, s.anchors[0], cfg.kappa, !cfg.kappa_literal);
        case Rule::Desk: return desk_parts(g, s.anchors).has_value();
        case Rule::CN:
            return s.anchors.size() == 1 && s.groups.size() == 2 &&
                   cn_partition_valid(g, s.anchors[0], s.groups[0], s.groups[1]);
        case Rule::OEDel: return valid_oedel(g, s);
        case Rule::Struct: return valid_struct(g, s, cfg);
        case Rule::Magnet: return s.anchors.size() == 2 && magnet_parts(g, s.anchors[0], s.anchors[1]).has_value();
        case Rule::LP: return valid_lp(g, s);
        case Rule::Triangle: return valid_triangle(g, s);
        default: return false;
    }
}

std::vector<Site> find_forward_sites(const Instance& inst, Rule rule, const RuleConfig& cfg,
                                     const VertexSet* scope) {
    const Graph& g = inst.graph;
    std::vector<Site> out;
    switch (rule) {
        case Rule::Deg0:
            for (VertexId v : scope_candidates(g, scope, 0))
                if (g.degree(v) == 0) out.push_back({rule, {v}, {}});
            break;
        case Rule::Deg1:
            for (VertexId v : scope_candidates(g, scope, 1))
                if (g.degree(v) == 1) push_if(out, {rule, {v, g.neighbors(v)[0]}, {}}, scope);
            break;
        case Rule::Deg2Fold:
        case Rule::Triangle:
            for (VertexId v : scope_candidates(g, scope, 1)) {
                if (g.degree(v) != 2) continue;
                const auto& nb = g.neighbors(v);
                if (g.has_edge(nb[0], nb[1]) == (rule == Rule::Triangle))
                    push_if(out, {rule, {v, nb[0], nb[1]}, {}}, scope);
            }
            break;
        case Rule::Deg3IS:
            for (VertexId v : scope_candidates(g, scope, 1)) {
                if (g.degree(v) != 3 || !g.is_independent_set(g.neighbors(v))) continue;
                VertexList p = g.neighbors(v);
                do push_if(out, {rule, {v, p[0], p[1], p[2]}, {}}, scope);
                while (std::next_permutation(p.begin(), p.end()));
            }
            break;
        case Rule::DegGtK:
            if (inst.mode != Mode::Budget) break;
            for (VertexId v : scope_candidates(g, scope, 0))
                if (static_cast<std::int64_t>(g.degree(v)) > inst.k) out.push_back({rule, {v}, {}});
            break;
        case Rule::Dom:
            for (VertexId u : scope_candidates(g, scope, 1))
                for (VertexId v : g.neighbors(u))
                    if (dominates(g, u, v)) push_if(out, {rule, {u, v}, {}}, scope);
            break;
        case Rule::Unconf:
            for (VertexId v : scope_candidates(g, scope, 0))
                if (unconfined_check(g, v).yes) out.push_back({rule, {v}, {}});
            break;
        case Rule::UnconfKappa:
            for (VertexId v : scope_candidates(g, scope, 0))
                if (unconfined_kappa_check(g, v, cfg.kappa, !cfg.kappa_literal)) out.push_back({rule, {v}, {}});
            break;
        case Rule::Desk: {
            std::set<VertexList> seen;
            for (VertexId x : scope_candidates(g, scope, 2)) {
                const auto& nx = g.neighbors(x);
                for (std::size_t i = 0; i < nx.size(); ++i)
                    for (std::size_t j = i + 1; j < nx.size(); ++j) {
                        VertexId y = nx[i], z = nx[j];
                        if (g.has_edge(y, z)) continue;
                        for (VertexId w : set_intersection(g.neighbors(y), g.neighbors(z))) {
                            if (w == x || g.has_edge(w, x)) continue;
                            // canonical rotation: smallest vertex first, then its smaller cycle neighbor
                            VertexList cyc{x, y, w, z};
                            auto it = std::min_element(cyc.begin(), cyc.end());
                            std::rotate(cyc.begin(), it, cyc.end());
                            if (cyc[3] < cyc[1]) std::swap(cyc[1], cyc[3]);
                            if (!seen.insert(cyc).second) continue;
                            if (desk_parts(g, cyc)) push_if(out, {rule, cyc, {}}, scope);
                        }
                    }
            }
            std::sort(out.begin(), out.end());
            break;
        }
        case Rule::CN:
            for (VertexId v : scope_candidates(g, scope, 1))
                if (auto p = find_cn_partition(g, v)) push_if(out, {rule, {v}, {p->first, p->second}}, scope);
            break;
        case Rule::OEDel:
            for (VertexId a : scope_candidates(g, scope, 1))
                for (VertexId b : g.neighbors(a)) {
                    if (b < a) continue;
                    VertexList na = g.neighbors(a), nb = g.neighbors(b);
                    VertexList sym;
                    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(sym));
                    for (VertexId c : sym) {
                        if (c == a || c == b) continue;
                        Site s{rule, {a, b, c}, {}};
                        if (valid_oedel(g, s)) push_if(out, s, scope);
                    }
                }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        case Rule::Struct:
            for (VertexId v : scope_candidates(g, scope, 1)) {
                VertexList p = g.neighbors(v);
                if (!cfg.unguarded_struction && struction_pairs(g, p).size() > p.size()) continue;
                bool all = p.size() <= cfg.struction_all_orders_max_degree;
                do {
                    VertexList a{v};
                    a.insert(a.end(), p.begin(), p.end());
                    push_if(out, {rule, a, {}}, scope);
                } while (all && std::next_permutation(p.begin(), p.end()));
            }
            break;
        case Rule::Magnet:
            for (VertexId a : scope_candidates(g, scope, 1))
                for (VertexId b : g.neighbors(a))
                    if (a < b && magnet_parts(g, a, b)) push_if(out, {rule, {a, b}, {}}, scope);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        case Rule::LP: {
            if (g.empty()) break;
            LpSolution sol = solve_lp_extreme(g);
            if (sol.v0.empty() && sol.v1.empty()) break;
            push_if(out, {rule, {}, {sol.v0, sol.v1}}, scope);
            break;
        }
        default:
            throw InvalidArgument("not a forward rule: " + std::string(rule_name(rule)));
    }
    return out;
}

std::vector<VertexList> apply_forward(Instance& inst, const Site& s, const RuleConfig& cfg) {
    if (!forward_site_valid(inst, s, cfg)) throw StaleSite("stale site " + to_string(s));
    Graph& g = inst.graph;
    std::vector<VertexList> created;
    const auto& a = s.anchors;
    switch (s.rule) {
        case Rule::Deg0: g.remove_vertex(a[0]); break;
        case Rule::Deg1:
            g.remove_vertex(a[0]);
            g.remove_vertex(a[1]);
            inst.k -= 1;
            break;
        case Rule::Deg2Fold:
            created.push_back({g.merge_vertices(a)});
            inst.k -= 1;
            break;
        case Rule::Triangle:
            for (VertexId x : a) g.remove_vertex(x);
            inst.k -= 2;
            break;
        case Rule::Deg3IS: {
            VertexId v = a[0], x = a[1], y = a[2], z = a[3];
            g.remove_vertex(v);
            VertexList nx = g.neighbors(x), ny = g.neighbors(y), nz = g.neighbors(z);
            g.add_edge(x, y);
            g.add_edge(y, z);
            auto link = [&](VertexId p, const VertexList& targets) {
                for (VertexId t : targets)
                    if (t != p && !g.has_edge(p, t)) g.add_edge(p, t);
            };
            link(x, ny);
            link(y, nz);
            link(z, nx);
            break;
        }
        case Rule::DegGtK:
        case Rule::Unconf:
        case Rule::UnconfKappa:
            g.remove_vertex(a[0]);
            inst.k -= 1;
            break;
        case Rule::Dom:
            g.remove_vertex(a[0]);
            inst.k -= 1;
            break;
        case Rule::Desk: {
            Desk d = *desk_parts(g, a);
            for (VertexId x : a) g.remove_vertex(x);
            for (VertexId x : d.na)
                for (VertexId y : d.nb)
                    if (!g.has_edge(x, y)) g.add_edge(x, y);
            inst.k -= 2;
            break;
        }
        case Rule::CN: {
            VertexId v = a[0];
            const VertexList &c1 = s.groups[0], &c2 = s.groups[1];
            VertexList skip = set_union(c2, VertexList{v});
            std::vector<std::pair<VertexId, VertexList>> links;
            for (VertexId x : c1)
                for (VertexId y : c2)
                    if (!g.has_edge(x, y)) links.push_back({x, set_difference(g.neighbors(y), skip)});
            g.remove_vertex(v);
            for (VertexId y : c2) g.remove_vertex(y);
            for (auto& [x, targets] : links)
                for (VertexId t : targets)
                    if (t != x && !g.has_edge(x, t)) g.add_edge(x, t);
            inst.k -= static_cast<std::int64_t>(c2.size());
            break;
        }
        case Rule::OEDel: g.remove_edge(a[0], a[1]); break;
        case Rule::Struct: {
            VertexId v = a[0];
            VertexList order(a.begin() + 1, a.end());
            auto pairs = struction_pairs(g, order);
            VertexList closed = g.closed_neighborhood(v);
            std::vector<VertexList> outside(order.size());
            for (std::size_t i = 0; i < order.size(); ++i) outside[i] = set_difference(g.neighbors(order[i]), closed);
            std::vector<VertexId> w;
            for (auto [i, j] : pairs) {
                w.push_back(g.add_vertex());
                created.push_back({w.back(), order[i], order[j]});
            }
            for (std::size_t p = 0; p < pairs.size(); ++p)
                for (std::size_t q = p + 1; q < pairs.size(); ++q) {
                    auto [i, j] = pairs[p];
                    auto [k, l] = pairs[q];
                    if (i != k || g.has_edge(order[j], order[l])) g.add_edge(w[p], w[q]);
                }
            for (std::size_t p = 0; p < pairs.size(); ++p)
                for (VertexId u : set_union(outside[pairs[p].first], outside[pairs[p].second])) g.add_edge(w[p], u);
            for (VertexId x : closed) g.remove_vertex(x);
            inst.k += static_cast<std::int64_t>(pairs.size()) - static_cast<std::int64_t>(order.size());
            break;
        }
        case Rule::Magnet: {
            MagnetParts p = *magnet_parts(g, a[0], a[1]);
            VertexId c = g.add_vertex();
            for (VertexId x : p.c) g.add_edge(c, x);
            g.remove_vertex(a[0]);
            g.remove_vertex(a[1]);
            created.push_back({c});
            inst.k -= 1;
            break;
        }
        case Rule::LP:
            for (VertexId x : s.groups[0]) g.remove_vertex(x);
            for (VertexId x : s.groups[1]) g.remove_vertex(x);
            inst.k -= static_cast<std::int64_t>(s.groups[1].size());
            break;
        default: throw InvalidArgument("not a forward rule");
    }
    return created;
}

}  // namespace vck
