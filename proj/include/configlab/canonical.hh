#pragma once

#include <configlab/hypergraph.hh>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace configlab
{
    /// Canonical relabelling of a 3-uniform hypergraph: two edge lists on n
    /// vertices get the same form iff the hypergraphs are isomorphic.
    struct CanonicalLabelling
    {
        /// Sorted relabelled edges, three bytes per edge.
        std::string form;
        /// label[v] is the canonical label of vertex v.
        std::vector<Vertex> label;
    };

    /// Individualisation-refinement over colour classes seeded by degree; the
    /// form is the minimum over all leaves of the search tree. Isolated
    /// vertices are never individualised. Intended for small n.
    [[nodiscard]] auto canonical_labelling(int n, std::span<const Edge> edges) -> CanonicalLabelling;
}
