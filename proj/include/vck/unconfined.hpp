#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Graph plus one extra vertex with a given neighborhood (used to test a
// candidate Ununconf insertion without touching the graph).
class AugmentedView {
public:
    AugmentedView(const Graph& g, VertexId extra, VertexList nbrs)
        : g_(g), extra_(extra), nbrs_(std::move(nbrs)) {}
    VertexList neighbors(VertexId x) const {
        if (x == extra_) return nbrs_;
        VertexList r = g_.neighbors(x);
        if (contains_sorted(nbrs_, x)) r.insert(std::lower_bound(r.begin(), r.end(), extra_), extra_);
        return r;
    }

private:
    const Graph& g_;
    VertexId extra_;
    VertexList nbrs_;
};

struct UnconfinedStep {
    VertexId u;                 // vertex of N(S) with one neighbor in S
    VertexId s;                 // that neighbor
    std::optional<VertexId> w;  // vertex added to S, none on the final step
};

struct UnconfinedResult {
    bool yes = false;
    std::vector<UnconfinedStep> steps;
};

// Algorithm 1; ties on |N(u) \ N[S]| broken by smallest id.
template <class G>
UnconfinedResult unconfined_check(const G& g, VertexId v) {
    UnconfinedResult res;
    VertexList s{v};
    VertexList ns = set_union(g.neighbors(v), s);
    for (;;) {
        std::optional<VertexId> best, best_s;
        VertexList best_out;
        for (VertexId u : set_difference(ns, s)) {
            const auto& nu = g.neighbors(u);
            VertexList in_s = set_intersection(VertexList(nu.begin(), nu.end()), s);
            if (in_s.size() != 1) continue;
            VertexList out = set_difference(VertexList(nu.begin(), nu.end()), ns);
            if (!best || out.size() < best_out.size()) {
                best = u;
                best_s = in_s[0];
                best_out = std::move(out);
            }
        }
        if (!best || best_out.size() > 1) return res;
        if (best_out.empty()) {
            res.steps.push_back({*best, *best_s, std::nullopt});
            res.yes = true;
            return res;
        }
        VertexId w = best_out[0];
        res.steps.push_back({*best, *best_s, w});
        s.insert(std::lower_bound(s.begin(), s.end(), w), w);
        const auto& nw = g.neighbors(w);
        ns = set_union(ns, VertexList(nw.begin(), nw.end()));
        ns = set_union(ns, VertexList{w});
    }
}

// Algorithm 2. With independent_x the chosen X must be an independent set;
// without it the rule is unsafe (X-X edges are left uncovered by the swap).
template <class G>
bool unconfined_kappa_check(const G& g, VertexId v, int kappa, bool independent_x = true) {
    if (kappa <= 0) return false;
    VertexList s{v};
    VertexList ns = set_union(g.neighbors(v), s);
    auto adjacent = [&](VertexId a, VertexId b) {
        const auto& na = g.neighbors(a);
        return std::binary_search(na.begin(), na.end(), b);
    };
    for (;;) {
        // group candidates x in N(S) by T = N(x) & S, keep those with |N(x) \ N[S]| <= 1
        std::map<VertexList, std::vector<std::pair<VertexId, std::optional<VertexId>>>> groups;
        for (VertexId x : set_difference(ns, s)) {
            const auto& nx = g.neighbors(x);
            VertexList vx(nx.begin(), nx.end());
            VertexList t = set_intersection(vx, s);
            if (t.empty() || t.size() > static_cast<std::size_t>(kappa)) continue;
            VertexList out = set_difference(vx, ns);
            if (out.size() > 1) continue;
            groups[t].push_back({x, out.empty() ? std::nullopt : std::optional<VertexId>(out[0])});
        }
        // search X of size |T| from each group; yes-answers first, then smallest |X|, then lexicographic
        std::optional<VertexList> best_x;
        std::optional<VertexId> best_w;
        bool found_yes = false;
        for (auto& [t, cand] : groups) {
            std::size_t need = t.size();
            if (cand.size() < need) continue;
            std::vector<VertexId> chosen(need);
            // lexicographic combinations of cand (already sorted by id)
            auto rec = [&](auto&& self, std::size_t pos, std::size_t start, std::optional<VertexId> w,
                           bool yes_only) -> bool {
                if (pos == need) {
                    VertexList x(chosen.begin(), chosen.end());
                    if (yes_only) {
                        best_x = x;
                        best_w.reset();
                        return true;
                    }
                    if (!best_x || x.size() < best_x->size() || (x.size() == best_x->size() && x < *best_x)) {
                        best_x = x;
                        best_w = w;
                    }
                    return true;
                }
                for (std::size_t i = start; i < cand.size(); ++i) {
                    auto [x, out] = cand[i];
                    if (yes_only && out) continue;
                    std::optional<VertexId> nw = w;
                    if (out) {
                        if (nw && *nw != *out) continue;
                        nw = out;
                    }
                    if (independent_x) {
                        bool ok = true;
                        for (std::size_t j = 0; j < pos && ok; ++j) ok = !adjacent(chosen[j], x);
                        if (!ok) continue;
                    }
                    chosen[pos] = x;
                    if (self(self, pos + 1, i + 1, nw, yes_only)) return true;
                }
                return false;
            };
            if (rec(rec, 0, 0, std::nullopt, true)) {
                found_yes = true;
                break;
            }
            rec(rec, 0, 0, std::nullopt, false);
        }
        if (found_yes) return true;
        if (!best_x) return false;
        if (!best_w) return true;
        VertexId w = *best_w;
        s.insert(std::lower_bound(s.begin(), s.end(), w), w);
        const auto& nw = g.neighbors(w);
        ns = set_union(ns, VertexList(nw.begin(), nw.end()));
        ns = set_union(ns, VertexList{w});
    }
}

}  // namespace vck
