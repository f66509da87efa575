#pragma once

#include <string>
#include <vector>

#include "critg/graph.hpp"

namespace critg {

// A total-order key identifying a graph up to isomorphism.  `bytes` is the
// graph6 line of the canonically relabeled graph, so equal bytes <=> the two
// graphs are isomorphic, and families can be persisted as sorted g6 lines
// directly.  `labeling[v]` gives the canonical position of original vertex v
// (the certifying relabeling).
struct CanonicalForm {
    std::string bytes;
    std::vector<int> labeling;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes == b.bytes;
    }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

CanonicalForm canonical_form(const Graph& g);

// g relabeled into canonical order; emit_graph6 of this equals canonical bytes.
Graph canonical_graph(const Graph& g);

Graph apply_labeling(const Graph& g, const std::vector<int>& labeling);

}  // namespace critg
