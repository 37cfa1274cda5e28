#include "vck/engine.hpp"

#include <atomic>
#include <map>

#include "vck/backward_rules.hpp"
#include "vck/forward_rules.hpp"

namespace vck {

std::vector<Site> find_sites(const Instance& inst, Rule rule, const RuleConfig& cfg, const VertexSet* scope) {
    return is_forward(rule) ? find_forward_sites(inst, rule, cfg, scope) : find_backward_sites(inst, rule, cfg, scope);
}

bool site_valid(const Instance& inst, const Site& site, const RuleConfig& cfg) {
    return is_forward(site.rule) ? forward_site_valid(inst, site, cfg) : backward_site_valid(inst, site, cfg);
}

ModificationRecord apply_site(Instance& inst, const Site& site, const RuleConfig& cfg) {
    if (!site_valid(inst, site, cfg)) throw StaleSite("stale site " + to_string(site));
    std::int64_t k0 = inst.k;
    inst.graph.begin_journal();
    std::vector<VertexList> created;
    std::optional<Site> restore;
    try {
        if (is_forward(site.rule)) {
            created = apply_forward(inst, site, cfg);
        } else {
            auto res = apply_backward(inst, site, cfg);
            created = std::move(res.created);
            restore = std::move(res.restore);
        }
    } catch (...) {
        inst.graph.take_journal();
        throw;
    }
    ModificationRecord rec = record_from_journal(inst.graph, inst.graph.take_journal());
    rec.rule = site.rule;
    rec.direction = is_forward(site.rule) ? Direction::Forward : Direction::Backward;
    rec.delta_k = inst.k - k0;
    rec.site = site;
    rec.created = std::move(created);
    rec.restore = std::move(restore);
    return rec;
}

VertexSet expand_roi(const VertexSet& roi, const ModificationRecord& rec, const Graph& after) {
    VertexSet out = roi;
    VertexList m = set_union(rec.added_vertices, rec.boundary);
    for (VertexId x : m) {
        if (!after.contains(x)) continue;
        out.insert(x);
        for (VertexId y : after.neighbors(x)) out.insert(y);
    }
    for (VertexId x : rec.removed_vertices) out.erase(x);
    return out;
}

namespace {
std::atomic<std::uint64_t> next_engine_id{1};
}

Engine::Engine(Instance inst, RuleConfig cfg) : inst_(std::move(inst)), cfg_(cfg), id_(next_engine_id++) {}

const ModificationRecord& Engine::push(ModificationRecord rec) {
    rec.step = trace_.size();
    trace_.push_back(std::move(rec));
    return trace_.back();
}

const ModificationRecord& Engine::apply(const Site& site) { return push(apply_site(inst_, site, cfg_)); }

const ModificationRecord& Engine::apply_record(const ModificationRecord& rec) {
    replay(inst_, rec);
    return push(rec);
}

const ModificationRecord& Engine::apply_converse(const ModificationRecord& rec) {
    Graph& g = inst_.graph;
    g.begin_journal();
    std::map<VertexId, VertexId> fresh;
    for (const Edge& e : rec.added_edges) g.remove_edge(e.u, e.v);
    for (VertexId v : rec.added_vertices) g.remove_vertex(v);
    for (VertexId v : rec.removed_vertices) fresh[v] = g.add_vertex();
    auto map = [&](VertexId v) { return fresh.count(v) ? fresh[v] : v; };
    for (const Edge& e : rec.removed_edges) g.add_edge(map(e.u), map(e.v));
    ModificationRecord out = record_from_journal(g, g.take_journal());
    out.rule = rec.rule;
    out.direction = rec.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
    out.delta_k = -rec.delta_k;
    out.converse = true;
    out.site = rec.site;
    inst_.k += out.delta_k;
    return push(std::move(out));
}

std::size_t Engine::deflate(std::span<const Rule> rules, Rng& rng) {
    std::size_t applied = 0;
    std::vector<Rule> order(rules.begin(), rules.end());
    for (;;) {
        rng.shuffle(order);
        bool any = false;
        for (Rule r : order) {
            auto s = sites(r);
            if (s.empty()) continue;
            apply(rng.pick(s));
            any = true;
            ++applied;
            break;
        }
        if (!any) return applied;
    }
}

std::size_t Engine::reduce_in_order(std::span<const Rule> rules) {
    std::size_t applied = 0;
    for (;;) {
        bool any = false;
        for (Rule r : rules) {
            auto s = sites(r);
            if (s.empty()) continue;
            apply(s.front());
            any = true;
            ++applied;
            break;
        }
        if (!any) return applied;
    }
}

SnapshotToken Engine::snapshot() {
    snaps_.push_back({inst_, trace_.size()});
    return {id_, snaps_.size() - 1};
}

std::size_t Engine::index_of(SnapshotToken t) const {
    if (t.owner != id_ || t.depth >= snaps_.size()) throw ForeignToken("snapshot token does not belong to this engine");
    return t.depth;
}

void Engine::revert(SnapshotToken t) {
    std::size_t i = index_of(t);
    inst_ = std::move(snaps_[i].inst);
    trace_.resize(snaps_[i].trace_size);
    snaps_.resize(i);
}

void Engine::release(SnapshotToken t) { snaps_.resize(index_of(t)); }

}  // namespace vck
