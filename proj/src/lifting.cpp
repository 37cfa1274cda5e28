#include "vck/lifting.hpp"

#include <algorithm>

#include "vck/unconfined.hpp"

namespace vck {

bool verify_cover(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges())
        if (!s.count(e.u) && !s.count(e.v)) return false;
    return true;
}

namespace {

bool in(const VertexSet& s, VertexId x) { return s.count(x) > 0; }

// cover of a graph where v is unconfined -> cover of the same size without v
VertexSet swap_out_unconfined(const Graph& g, VertexId v, VertexSet s) {
    if (!in(s, v)) {
        UnconfinedResult r = unconfined_check(g, v);
        if (!r.yes) throw Error("record no longer certifies its unconfined vertex");
        // first step whose added vertex is in the cover, else the final step
        std::size_t j = r.steps.size() - 1;
        for (std::size_t i = 0; i + 1 < r.steps.size(); ++i)
            if (in(s, *r.steps[i].w)) {
                j = i;
                break;
            }
        for (;;) {
            s.erase(r.steps[j].u);
            s.insert(r.steps[j].s);
            if (r.steps[j].s == v) break;
            auto it = std::find_if(r.steps.begin(), r.steps.end(),
                                   [&](const UnconfinedStep& st) { return st.w == r.steps[j].s; });
            j = static_cast<std::size_t>(it - r.steps.begin());
        }
    }
    s.erase(v);
    return s;
}

VertexSet lift_forward(const Graph& before, const ModificationRecord& rec, VertexSet s) {
    const auto& a = rec.site.anchors;
    const auto& grp = rec.site.groups;
    switch (rec.rule) {
        case Rule::Deg0: break;
        case Rule::Deg1: s.insert(a[1]); break;
        case Rule::Deg2Fold: {
            VertexId merged = rec.created.at(0).at(0);
            if (in(s, merged)) {
                s.erase(merged);
                s.insert(a[1]);
                s.insert(a[2]);
            } else {
                s.insert(a[0]);
            }
            break;
        }
        case Rule::Triangle:
            s.insert(a[1]);
            s.insert(a[2]);
            break;
        case Rule::Deg3IS: {
            VertexId v = a[0], x = a[1], y = a[2], z = a[3];
            bool hx = in(s, x), hy = in(s, y), hz = in(s, z);
            if (hx && hy && hz) break;
            if (hx && hy) s.erase(x);       // z missing
            else if (hy && hz) s.erase(y);  // x missing
            else if (hx && hz) s.erase(z);  // y missing
            else s.erase(y);                // only y present
            s.insert(v);
            break;
        }
        case Rule::DegGtK:
        case Rule::Unconf:
        case Rule::UnconfKappa:
        case Rule::Dom: s.insert(a[0]); break;
        case Rule::Desk: {
            VertexList A = sorted({a[0], a[2]}), B = sorted({a[1], a[3]});
            VertexList na = set_difference(before.neighborhood(A), B);
            bool all = std::all_of(na.begin(), na.end(), [&](VertexId x) { return in(s, x); });
            for (VertexId x : all ? B : A) s.insert(x);
            break;
        }
        case Rule::CN: {
            const VertexList &c1 = grp[0], &c2 = grp[1];
            auto missing = std::find_if(c1.begin(), c1.end(), [&](VertexId x) { return !in(s, x); });
            if (missing == c1.end()) {
                for (VertexId x : c2) s.insert(x);
            } else {
                s.insert(a[0]);
                for (VertexId y : c2)
                    if (before.has_edge(*missing, y)) s.insert(y);
            }
            break;
        }
        case Rule::OEDel: {
            VertexId x = a[0], y = a[1], c = a[2];
            if (in(s, x) || in(s, y)) break;
            s.erase(c);
            s.insert(before.has_edge(c, x) ? x : y);
            break;
        }
        case Rule::Struct: {
            // independent-set view: I' = complement of the cover among W
            VertexId v = a[0];
            std::vector<VertexList> chosen;  // {w, ai, aj} not in the cover
            for (const auto& t : rec.created)
                if (!in(s, t[0])) chosen.push_back(t);
            VertexList order(a.begin() + 1, a.end());
            VertexSet indep;
            if (chosen.empty()) {
                indep.insert(v);
            } else {
                indep.insert(chosen[0][1]);
                for (const auto& t : chosen) indep.insert(t[2]);
            }
            for (const auto& t : rec.created) s.erase(t[0]);
            for (VertexId x : before.closed_neighborhood(v))
                if (!indep.count(x)) s.insert(x);
            break;
        }
        case Rule::Magnet: {
            VertexId x = a[0], y = a[1], c = rec.created.at(0).at(0);
            if (in(s, c)) {
                s.erase(c);
                s.insert(x);
                s.insert(y);
                break;
            }
            VertexList A = set_difference(before.neighbors(x), before.closed_neighborhood(y));
            bool all = std::all_of(A.begin(), A.end(), [&](VertexId z) { return in(s, z); });
            s.insert(all ? y : x);
            break;
        }
        case Rule::LP:
            for (VertexId x : grp[1]) s.insert(x);
            break;
        default: throw InvalidArgument("no lift for rule " + std::string(rule_name(rec.rule)));
    }
    return s;
}

VertexSet project_backward(const Graph& before, const Graph& after, const ModificationRecord& rec, VertexSet s) {
    const auto& a = rec.site.anchors;
    switch (rec.rule) {
        case Rule::Undeg2: {
            VertexId v = a[0];
            for (VertexId x : rec.created.at(0)) s.erase(x);
            const VertexList& nb = before.neighbors(v);
            bool covered = std::all_of(nb.begin(), nb.end(), [&](VertexId x) { return in(s, x); });
            if (covered) s.erase(v);
            else s.insert(v);
            break;
        }
        case Rule::Undeg3: {
            VertexId x = a[0], y = a[1], z = a[2], v = rec.created.at(0).at(0);
            if (!in(s, v)) break;
            s.erase(v);
            bool hx = in(s, x), hy = in(s, y), hz = in(s, z);
            int cnt = hx + hy + hz;
            if (cnt == 3) break;
            if (cnt == 2) {
                s.insert(x);
                s.insert(y);
                s.insert(z);
            } else if (cnt == 0) {
                s.insert(y);
            } else if (hy) {
                s.insert(x);
            } else if (hx) {
                s.insert(z);
            } else {
                s.insert(y);
            }
            break;
        }
        case Rule::Uncn: {
            VertexId x = a[0], y = a[1], v = rec.created.at(0).at(0), c = rec.created.at(0).at(1);
            if (!in(s, v)) {
                s.erase(c);
                break;
            }
            bool hx = in(s, x), hy = in(s, y), hc = in(s, c);
            s.erase(v);
            s.erase(c);
            if (hx && hy) break;
            if (hc) s.insert(hx ? y : x);
            break;
        }
        case Rule::Undom: {
            VertexId u = rec.created.at(0).at(0), v = a[0];
            if (in(s, u)) s.erase(u);
            else s.erase(v);
            break;
        }
        case Rule::Ununconf: s = swap_out_unconfined(after, rec.created.at(0).at(0), std::move(s)); break;
        case Rule::OEIns: break;
        default: throw InvalidArgument("no projection for rule " + std::string(rule_name(rec.rule)));
    }
    return s;
}

}  // namespace

VertexSet lift_step(const Graph& before, const Graph& after, const ModificationRecord& rec, VertexSet cover) {
    if (rec.converse) {
        // inverse of a vertex/edge deletion: the smaller graph is a subgraph of the larger one
        if (!rec.removed_vertices.empty() || !rec.removed_edges.empty())
            throw InvalidArgument("lifting a converse record that deletes is not supported");
        if ((rec.rule == Rule::Unconf || rec.rule == Rule::UnconfKappa) && rec.added_vertices.size() == 1 &&
            (rec.rule == Rule::Unconf || unconfined_check(after, rec.added_vertices[0]).yes))
            cover = swap_out_unconfined(after, rec.added_vertices[0], std::move(cover));
        VertexSet out;
        for (VertexId x : cover)
            if (before.contains(x)) out.insert(x);
        for (VertexId x : before.vertices()) {
            if (!out.count(x)) continue;
            const VertexList& nb = before.neighbors(x);
            if (std::all_of(nb.begin(), nb.end(), [&](VertexId y) { return out.count(y) > 0; })) out.erase(x);
        }
        return out;
    }
    if (rec.direction == Direction::Forward) return lift_forward(before, rec, std::move(cover));
    return project_backward(before, after, rec, std::move(cover));
}

VertexSet lift_solution(const Graph& final_graph, std::span<const ModificationRecord> trace, const VertexSet& cover) {
    if (!verify_cover(final_graph, cover)) throw InvalidSolution("input is not a vertex cover of the final graph");
    for (VertexId x : cover)
        if (!final_graph.contains(x)) throw InvalidSolution("cover contains unknown vertex " + std::to_string(x));
    Graph after = final_graph;
    VertexSet s = cover;
    for (std::size_t i = trace.size(); i-- > 0;) {
        Graph before = after;
        unreplay(before, trace[i]);
        s = lift_step(before, after, trace[i], std::move(s));
        if (!verify_cover(before, s))
            throw Error("lift produced a non-cover at step " + std::to_string(trace[i].step) + " (" +
                        std::string(rule_name(trace[i].rule)) + ")");
        after = std::move(before);
    }
    return s;
}

}  // namespace vck
