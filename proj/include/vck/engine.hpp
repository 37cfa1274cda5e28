#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vck/graph.hpp"
#include "vck/record.hpp"
#include "vck/rng.hpp"
#include "vck/rules.hpp"

namespace vck {

std::vector<Site> find_sites(const Instance& inst, Rule rule, const RuleConfig& cfg,
                             const VertexSet* scope = nullptr);
bool site_valid(const Instance& inst, const Site& site, const RuleConfig& cfg);
// Applies the site and returns the net modification (step index left at 0).
ModificationRecord apply_site(Instance& inst, const Site& site, const RuleConfig& cfg);

// (X u N[M]) \ D with M = added vertices and surviving endpoints of changed edges, D = removed vertices.
VertexSet expand_roi(const VertexSet& roi, const ModificationRecord& rec, const Graph& after);

struct SnapshotToken {
    std::uint64_t owner = 0;
    std::size_t depth = 0;
};
struct ForeignToken : Error { using Error::Error; };

class Engine {
public:
    explicit Engine(Instance inst, RuleConfig cfg = {});

    const Instance& instance() const { return inst_; }
    const Graph& graph() const { return inst_.graph; }
    const Trace& trace() const { return trace_; }
    const RuleConfig& config() const { return cfg_; }
    RuleConfig& config() { return cfg_; }

    std::vector<Site> sites(Rule rule, const VertexSet* scope = nullptr) const {
        return find_sites(inst_, rule, cfg_, scope);
    }
    const ModificationRecord& apply(const Site& site);
    // re-applies a record produced on an identical instance state
    const ModificationRecord& apply_record(const ModificationRecord& rec);
    // inverse of a recorded forward modification, on fresh ids
    const ModificationRecord& apply_converse(const ModificationRecord& rec);

    // randomized exhaustive deflation; returns the number of records appended
    std::size_t deflate(std::span<const Rule> rules, Rng& rng);
    // rules tried in the given order, first applicable site applied, restart
    std::size_t reduce_in_order(std::span<const Rule> rules);

    SnapshotToken snapshot();
    void revert(SnapshotToken t);   // restores the state and drops the snapshot (and newer ones)
    void release(SnapshotToken t);  // drops the snapshot (and newer ones), keeps the state

private:
    const ModificationRecord& push(ModificationRecord rec);
    std::size_t index_of(SnapshotToken t) const;

    struct Snap {
        Instance inst;
        std::size_t trace_size;
    };
    Instance inst_;
    RuleConfig cfg_;
    Trace trace_;
    std::vector<Snap> snaps_;
    std::uint64_t id_;
};

}  // namespace vck
