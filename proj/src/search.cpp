#include "vck/search.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"
#include "vck/backward_rules.hpp"
#include "vck/isomorphism.hpp"

namespace vck {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool unlimited;
    explicit Deadline(double seconds) : unlimited(!(seconds < 1e9)) {
        double s = unlimited ? 1e9 : seconds;
        end = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
    }
    bool passed() const { return !unlimited && Clock::now() >= end; }
};

std::uint64_t shape_key(const Instance& inst) {
    std::vector<std::size_t> deg;
    for (VertexId v : inst.graph.vertices()) deg.push_back(inst.graph.degree(v));
    std::sort(deg.begin(), deg.end());
    std::uint64_t h = Rng::mix(inst.graph.num_vertices() * 1000003ULL + inst.graph.num_edges());
    h = Rng::mix(h ^ static_cast<std::uint64_t>(inst.k));
    for (std::size_t d : deg) h = Rng::mix(h ^ d);
    return h;
}

VertexList touched_union(std::span<const ModificationRecord> a, std::span<const ModificationRecord> b = {}) {
    VertexList out;
    for (const auto& r : a) out = set_union(out, r.touched());
    for (const auto& r : b) out = set_union(out, r.touched());
    return out;
}

bool same_state(const Instance& x, const Instance& y, const VertexList& modified) {
    return x.k == y.k && x.graph.num_vertices() == y.graph.num_vertices() &&
           x.graph.num_edges() == y.graph.num_edges() && locally_isomorphic(x.graph, y.graph, modified);
}

class Finder {
public:
    Finder(const Instance& root, const FindConfig& cfg, const RuleConfig& rc)
        : root_(root), cfg_(cfg), rc_(rc), deadline_(cfg.time_limit) {
        rc_.undeg2_max_degree = std::min(rc_.undeg2_max_degree, cfg.undeg2_max_degree);
        rc_.subset_cap = std::min(rc_.subset_cap, cfg.subset_cap);
        n0_ = static_cast<std::int64_t>(root.graph.num_vertices());
        k0_ = root.k;
    }

    std::vector<FoundSequence> run() {
        if (cfg_.time_limit <= 0 || cfg_.max_depth == 0) return {};
        for (VertexId v : root_.graph.vertices()) {
            if (done()) break;
            root_v_ = v;
            states_ = {root_};
            chain_.clear();
            dfs(VertexSet{v});
        }
        return std::move(found_);
    }

private:
    bool done() const { return stopped_ || (cfg_.stop_at_first && !found_.empty()); }

    void dfs(const VertexSet& roi) {
        std::size_t depth = chain_.size();
        const Instance cur = states_.back();
        std::vector<Rule> order = cfg_.forward;
        if (depth + 1 < cfg_.max_depth) order.insert(order.end(), cfg_.backward.begin(), cfg_.backward.end());
        struct Sibling {
            std::uint64_t key;
            Instance inst;
            VertexList touched;
        };
        std::vector<Sibling> siblings;
        for (Rule r : order) {
            if (r == Rule::DegGtK && cur.mode != Mode::Budget) continue;
            for (const Site& s : find_sites(cur, r, rc_, &roi)) {
                if (done()) return;
                if (deadline_.passed()) {
                    stopped_ = true;
                    return;
                }
                Instance next = cur;
                ModificationRecord rec = apply_site(next, s, rc_);
                rec.step = depth;
                std::uint64_t key = shape_key(next);
                VertexList t = rec.touched();
                bool dup = false;
                for (const auto& sib : siblings)
                    if (sib.key == key && same_state(sib.inst, next, set_union(sib.touched, t))) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                siblings.push_back({key, next, t});
                chain_.push_back(rec);
                if (!prefix_redundant(next)) {
                    std::int64_t dn = static_cast<std::int64_t>(next.graph.num_vertices()) - n0_;
                    std::int64_t dk = next.k - k0_;
                    if (accept_change(dn, dk)) {
                        record(next, dn, dk);
                    } else if (depth + 1 < cfg_.max_depth) {
                        states_.push_back(next);
                        dfs(expand_roi(roi, rec, next.graph));
                        states_.pop_back();
                    }
                }
                chain_.pop_back();
            }
        }
    }

    // locally isomorphic to the state after a proper prefix of the chain (including the root)
    bool prefix_redundant(const Instance& next) const {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            std::span<const ModificationRecord> tail(chain_.data() + i, chain_.size() - i);
            if (same_state(states_[i], next, touched_union(tail))) return true;
        }
        return false;
    }

    void record(const Instance& result, std::int64_t dn, std::int64_t dk) {
        for (auto& f : found_) {
            if (!same_state(f.result, result, touched_union(f.records, chain_))) continue;
            if (chain_.size() < f.records.size()) fill(f, result, dn, dk);
            return;
        }
        found_.emplace_back();
        fill(found_.back(), result, dn, dk);
    }

    void fill(FoundSequence& f, const Instance& result, std::int64_t dn, std::int64_t dk) const {
        f.root = root_v_;
        f.records = chain_;
        f.rules.clear();
        for (const auto& r : chain_) f.rules.push_back(r.rule);
        f.dn = dn;
        f.dk = dk;
        f.result = result;
    }

    const Instance& root_;
    const FindConfig& cfg_;
    RuleConfig rc_;
    Deadline deadline_;
    std::int64_t n0_ = 0, k0_ = 0;
    VertexId root_v_ = 0;
    std::vector<Instance> states_;
    Trace chain_;
    std::vector<FoundSequence> found_;
    bool stopped_ = false;
};

std::string log_line(const nlohmann::json& j) { return j.dump(); }

}  // namespace

std::vector<FoundSequence> find(const Instance& inst, const FindConfig& cfg, const RuleConfig& rules) {
    return Finder(inst, cfg, rules).run();
}

SearchResult find_and_reduce(const Instance& inst, const FindConfig& cfg, const RuleConfig& rules,
                             const std::vector<Rule>& preset) {
    Engine e(inst, rules);
    SearchResult out;
    Deadline deadline(cfg.time_limit);
    if (cfg.time_limit > 0) {
        e.reduce_in_order(preset);
        while (!deadline.passed() && !e.graph().empty()) {
            FindConfig fc = cfg;
            fc.stop_at_first = true;
            fc.time_limit = std::chrono::duration<double>(deadline.end - Clock::now()).count();
            if (fc.time_limit <= 0) break;
            auto found = find(e.instance(), fc, rules);
            ++out.iterations;
            if (found.empty()) break;
            std::size_t n_before = e.graph().num_vertices();
            for (const auto& rec : found.front().records) e.apply(rec.site);
            e.reduce_in_order(preset);
            ++out.accepted;
            nlohmann::json rs = nlohmann::json::array();
            for (Rule r : found.front().rules) rs.push_back(rule_name(r));
            out.log.push_back(log_line({{"iteration", out.iterations},
                                        {"sequence", rs},
                                        {"n_before", n_before},
                                        {"n_after", e.graph().num_vertices()},
                                        {"k", e.instance().k}}));
        }
    }
    out.final = e.instance();
    out.trace = e.trace();
    return out;
}

namespace {

SearchResult run_id(const Instance& inst, const InflateDeflateConfig& cfg, Rng& rng, const RuleConfig& rules) {
    Engine e(inst, rules);
    SearchResult out;
    Deadline deadline(cfg.time_limit);
    if (cfg.time_limit <= 0 || cfg.iterations == 0) {
        out.final = e.instance();
        return out;
    }
    if (cfg.initial_deflate) e.deflate(cfg.forward, rng);
    std::vector<Rule> backward = cfg.backward;
    while (out.iterations < cfg.iterations && !e.graph().empty() && !deadline.passed() && !backward.empty()) {
        ++out.iterations;
        std::size_t n0 = e.graph().num_vertices();
        SnapshotToken tok = e.snapshot();

        // inflation scope: whole graph, or a ball plus everything added inside it
        std::optional<VertexSet> scope;
        std::size_t base = n0;
        if (cfg.radius > 0) {
            VertexList vs = e.graph().vertex_list();
            VertexList b = e.graph().ball(rng.pick(vs), cfg.radius);
            scope.emplace(b.begin(), b.end());
            base = b.size();
        }
        auto grown = [&]() -> std::size_t {
            if (!scope) return e.graph().num_vertices();
            std::size_t c = 0;
            for (VertexId x : *scope) c += e.graph().contains(x);
            return c;
        };
        std::size_t target = static_cast<std::size_t>(std::ceil((1.0 + cfg.alpha) * static_cast<double>(base)));
        if (target <= base) target = base + 1;
        std::size_t failures = 0;
        while (grown() < target && failures < cfg.max_failed_samples) {
            Rule r = rng.pick(backward);
            auto site = sample_backward_site(e.instance(), r, rng, scope ? &*scope : nullptr);
            if (!site || !site_valid(e.instance(), *site, e.config())) {
                ++failures;
                continue;
            }
            const ModificationRecord& rec = e.apply(*site);
            if (scope) {
                for (VertexId x : rec.added_vertices) scope->insert(x);
                for (VertexId x : rec.removed_vertices) scope->erase(x);
            }
        }
        std::size_t inflated = e.graph().num_vertices();
        e.deflate(cfg.forward, rng);
        std::size_t n1 = e.graph().num_vertices();
        bool keep = n1 < n0;
        if (keep) {
            e.release(tok);
            ++out.accepted;
        } else {
            e.revert(tok);
        }
        out.log.push_back(log_line({{"iteration", out.iterations},
                                    {"n_before", n0},
                                    {"n_inflated", inflated},
                                    {"n_deflated", n1},
                                    {"accepted", keep},
                                    {"n", e.graph().num_vertices()},
                                    {"k", e.instance().k}}));
    }
    out.final = e.instance();
    out.trace = e.trace();
    return out;
}

}  // namespace

SearchResult inflate_deflate(const Instance& inst, const InflateDeflateConfig& cfg, Rng& rng,
                             const RuleConfig& rules) {
    InflateDeflateConfig c = cfg;
    c.radius = 0;
    return run_id(inst, c, rng, rules);
}

SearchResult local_inflate_deflate(const Instance& inst, InflateDeflateConfig cfg, Rng& rng,
                                   const RuleConfig& rules) {
    if (cfg.radius == 0) cfg.radius = 2;
    return run_id(inst, cfg, rng, rules);
}

}  // namespace vck
