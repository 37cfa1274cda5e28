#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

using Coloring = std::map<VertexId, std::uint32_t>;

// Coarsest stable refinement. Output colours are ranks of (colour, neighbour
// colour multiset) signatures, so they do not depend on vertex ids.
Coloring color_refinement(const Graph& g, const Coloring& initial = {});

struct CanonicalForm {
    // n, initial colours in canonical order, then the canonical edge list
    std::vector<std::uint32_t> code;
    VertexList order;  // vertex at each canonical position; not part of equality

    bool operator==(const CanonicalForm& o) const { return code == o.code; }
    auto operator<=>(const CanonicalForm& o) const { return code <=> o.code; }
    std::string bytes() const;
};

CanonicalForm canonical_form(const Graph& g, const Coloring& initial = {});
bool isomorphic(const Graph& a, const Graph& b);

// Whether there is an isomorphism a -> b that is the identity on every vertex
// outside `modified`. Both graphs are assumed to come from one common pre-image
// by modifications confined to `modified`; vertices present in only one graph
// are treated as modified.
bool locally_isomorphic(const Graph& a, const Graph& b, const VertexList& modified);

}  // namespace vck
