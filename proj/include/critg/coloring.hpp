#pragma once

#include <array>
#include <optional>

#include "critg/graph.hpp"
#include "critg/recognition.hpp"

namespace critg {

// coloring[v] is a color in 1..k; a coloring is proper when no edge is
// monochromatic.
using Coloring = std::vector<int>;

bool is_proper(const Graph& g, const Coloring& coloring);
int color_count(const Coloring& coloring);

// Five bag chromatic numbers in cyclic order.
using Pattern = std::array<int, 5>;

VertexSet max_clique(const Graph& g);

// Exact: returns a proper coloring with at most k colors, or nullopt iff
// chi(g) > k.  Branch and bound with clique seeding, least-domain branching
// and fresh-color symmetry breaking.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

int chromatic_number(const Graph& g);

// True iff chi(g) = k and chi(g - v) = k-1 for every vertex v.
bool is_k_critical(const Graph& g, int k);

// The counting bound: a pseudo-buoy with k_i-chromatic bags has chi > h
// exactly when sum(k_i) > 2h (each color class meets at most two bags).
bool pseudo_buoy_lower_bound(const Pattern& pattern, int h);

// Exact chromatic number of any buoy realizing the pattern with
// k_i-chromatic bags: max(max_i(k_i + k_{i+1}), ceil(sum/2)).
int buoy_chromatic(const Pattern& pattern);

// Constructive h-coloring of a pseudo-buoy from given bag colorings, by the
// good-pair induction: peel one color class from each bag of a good pair
// (j, j+2), give the union the h-th color, recurse with h-1.  Requires
// k_i + k_{i+1} <= h cyclically and sum(k_i) <= 2h, where k_i is the number
// of colors the i-th bag coloring uses; throws std::invalid_argument
// otherwise.  bag_colorings[i][t] colors vertex pb.bags[i][t]; host's vertex
// set must be exactly the disjoint union of the bags.
Coloring color_pseudo_buoy(const Graph& host, const PseudoBuoy& pb,
                           const std::array<Coloring, 5>& bag_colorings, int h);

// Optimal coloring of a (P5,co-P5)-free graph by structure: split join
// factors on a disconnected complement, decompose through a grown buoy
// otherwise, fall back to the exact oracle on perfect graphs.  Checks the
// freeness precondition (throws NotFreeError).
Coloring structural_color(const Graph& g);

}  // namespace critg
