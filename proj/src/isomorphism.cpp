#include "vck/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace vck {

namespace {

using Cols = std::vector<std::uint32_t>;

struct Dense {
    int n = 0;
    std::vector<std::vector<int>> adj;
};

Dense densify(const Graph& g, const VertexList& ids) {
    Dense d;
    d.n = static_cast<int>(ids.size());
    d.adj.resize(ids.size());
    for (int i = 0; i < d.n; ++i)
        for (VertexId y : g.neighbors(ids[i])) {
            auto it = std::lower_bound(ids.begin(), ids.end(), y);
            if (it != ids.end() && *it == y) d.adj[i].push_back(static_cast<int>(it - ids.begin()));
        }
    return d;
}

// ranks of the values, ties preserved
Cols rank(const std::vector<std::vector<std::uint32_t>>& sig) {
    std::vector<int> idx(sig.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    Cols out(sig.size());
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++r;
        out[idx[i]] = r;
    }
    return out;
}

std::size_t classes(const Cols& c) {
    if (c.empty()) return 0;
    return *std::max_element(c.begin(), c.end()) + 1;
}

void refine(const Dense& d, Cols& col) {
    std::vector<std::vector<std::uint32_t>> sig(d.n);
    for (int v = 0; v < d.n; ++v) sig[v] = {col[v]};
    col = rank(sig);
    std::size_t k = classes(col);
    for (;;) {
        for (int v = 0; v < d.n; ++v) {
            auto& s = sig[v];
            s.assign(1, col[v]);
            for (int u : d.adj[v]) s.push_back(col[u]);
            std::sort(s.begin() + 1, s.end());
        }
        Cols next = rank(sig);
        std::size_t k2 = classes(next);
        col = std::move(next);
        if (k2 == k) return;
        k = k2;
    }
}

struct Canon {
    const Dense& d;
    Cols init;  // ranked initial colours
    bool have = false;
    std::vector<std::uint32_t> best;
    std::vector<int> best_pos;
    std::vector<std::vector<int>> gens;  // automorphisms as vertex maps

    std::vector<std::uint32_t> certificate(const Cols& pos) const {
        std::vector<int> at(d.n);
        for (int v = 0; v < d.n; ++v) at[pos[v]] = v;
        std::vector<std::uint32_t> c;
        c.push_back(static_cast<std::uint32_t>(d.n));
        for (int i = 0; i < d.n; ++i) c.push_back(init[at[i]]);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
        for (int v = 0; v < d.n; ++v)
            for (int u : d.adj[v])
                if (pos[v] < pos[u]) e.emplace_back(pos[v], pos[u]);
        std::sort(e.begin(), e.end());
        for (auto [a, b] : e) c.push_back(a), c.push_back(b);
        return c;
    }

    static int find(std::vector<int>& p, int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }

    void search(Cols col, std::vector<int>& prefix) {
        refine(d, col);
        if (classes(col) == static_cast<std::size_t>(d.n)) {
            auto cert = certificate(col);
            std::vector<int> pos(col.begin(), col.end());
            if (!have || cert < best) {
                have = true;
                best = std::move(cert);
                best_pos = std::move(pos);
            } else if (cert == best) {
                std::vector<int> at(d.n), g(d.n);
                for (int v = 0; v < d.n; ++v) at[best_pos[v]] = v;
                for (int v = 0; v < d.n; ++v) g[v] = at[pos[v]];
                gens.push_back(std::move(g));
            }
            return;
        }
        // first non-singleton cell
        std::vector<int> size(d.n, 0);
        for (int v = 0; v < d.n; ++v) ++size[col[v]];
        std::uint32_t target = 0;
        while (size[target] < 2) ++target;
        std::vector<int> cell;
        for (int v = 0; v < d.n; ++v)
            if (col[v] == target) cell.push_back(v);
        std::vector<int> tried;
        for (int v : cell) {
            // orbit pruning with the generators fixing the prefix pointwise
            std::vector<int> uf(d.n);
            std::iota(uf.begin(), uf.end(), 0);
            for (const auto& g : gens) {
                bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
                if (!fixes) continue;
                for (int x = 0; x < d.n; ++x) uf[find(uf, x)] = find(uf, g[x]);
            }
            bool skip = std::any_of(tried.begin(), tried.end(), [&](int t) { return find(uf, t) == find(uf, v); });
            if (skip) continue;
            tried.push_back(v);
            Cols child(d.n);
            for (int u = 0; u < d.n; ++u) child[u] = 2 * col[u] + (u != v ? 1 : 0);
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }
};

Cols initial_colours(const VertexList& ids, const Coloring& initial) {
    Cols c(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto it = initial.find(ids[i]);
        if (it != initial.end()) c[i] = it->second;
    }
    return c;
}

}  // namespace

Coloring color_refinement(const Graph& g, const Coloring& initial) {
    VertexList ids = g.vertex_list();
    Dense d = densify(g, ids);
    Cols col = initial_colours(ids, initial);
    refine(d, col);
    Coloring out;
    for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = col[i];
    return out;
}

std::string CanonicalForm::bytes() const {
    std::string s;
    for (std::uint32_t x : code) {
        for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>(x >> (8 * i) & 0xff));
    }
    return s;
}

CanonicalForm canonical_form(const Graph& g, const Coloring& initial) {
    VertexList ids = g.vertex_list();
    Dense d = densify(g, ids);
    Cols raw = initial_colours(ids, initial);
    // keep colour values (not just ranks) so that differently coloured graphs differ
    Canon c{d, raw, false, {}, {}, {}};
    std::vector<int> prefix;
    c.search(raw, prefix);
    CanonicalForm f;
    if (d.n == 0) {
        f.code = {0};
        return f;
    }
    f.code = std::move(c.best);
    f.order.resize(ids.size());
    for (std::size_t v = 0; v < ids.size(); ++v) f.order[c.best_pos[v]] = ids[v];
    return f;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool locally_isomorphic(const Graph& a, const Graph& b, const VertexList& modified) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    VertexSet free(modified.begin(), modified.end());
    for (VertexId x : a.vertices())
        if (!b.contains(x)) free.insert(x);
    for (VertexId x : b.vertices())
        if (!a.contains(x)) free.insert(x);

    auto region = [&](const Graph& g) {
        VertexSet r;
        for (VertexId x : free) {
            if (!g.contains(x)) continue;
            r.insert(x);
            for (VertexId y : g.neighbors(x)) r.insert(y);
        }
        return r;
    };
    VertexSet ra = region(a), rb = region(b);
    VertexList pa, pb;
    for (VertexId x : ra)
        if (!free.count(x)) pa.push_back(x);
    for (VertexId x : rb)
        if (!free.count(x)) pb.push_back(x);
    if (pa != pb) return false;
    for (VertexId x : pa)
        for (VertexId y : pa)
            if (x < y && a.has_edge(x, y) != b.has_edge(x, y)) return false;

    auto form = [&](const Graph& g, const VertexSet& r) {
        VertexList rl(r.begin(), r.end());
        Graph sub = g.induced_subgraph(rl);
        Coloring col;
        for (VertexId x : rl) col[x] = free.count(x) ? 0 : x + 1;
        return canonical_form(sub, col);
    };
    return form(a, ra) == form(b, rb);
}

}  // namespace vck
