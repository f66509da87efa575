#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace critg {

// An explicit subset of the vertices 0..n-1 of some host graph.
using VertexSet = std::vector<int>;

// Simple undirected graph, treated as an immutable value after construction.
// Adjacency is stored as packed 64-bit rows so completeness/anticompleteness
// tests against vertex sets reduce to word operations.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {});

    int size() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const;
    VertexSet neighbors(int v) const;

    // Raw row access for hot loops. row(v) points at stride() words.
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * stride_;
    }
    int stride() const { return stride_; }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// The one place adjacency gets mutated; everything else works with Graph values.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    void toggle_edge(int u, int v);
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Edge xy in the result iff x != y and xy is not an edge of g.
Graph complement(const Graph& g);

// Disjoint union of g and h plus all cross edges; g's vertices come first.
Graph join(const Graph& g, const Graph& h);

// Vertices of s relabeled 0..|s|-1 in the order given; adjacency restricted.
// Throws std::out_of_range on an invalid vertex index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// True iff every vertex outside x is complete or anticomplete to x.
bool is_module(const Graph& g, const VertexSet& x);

// Replace module m by h: every former neighbor of m becomes complete to h,
// non-neighbors stay anticomplete, internal adjacency is preserved.  Vertex
// order is g's vertices minus m (in g's order) followed by h's vertices.
// Throws std::invalid_argument unless m is a nonempty module (or singleton).
Graph substitute(const Graph& g, const VertexSet& m, const Graph& h);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

// A pair of comparable vertices, N(u) contained in N(v), if one exists.  Open
// neighborhoods: an adjacent pair is never comparable since v lies in N(u)
// but not in N(v), which is what lets critical cliques pass the check.
std::optional<std::pair<int, int>> has_comparable_pair(const Graph& g);

// A clique whose removal disconnects g, if one exists (search over all
// cliques; exponential, intended for small graphs).  A disconnected graph
// yields the empty clique.
std::optional<VertexSet> has_clique_cutset(const Graph& g);

}  // namespace critg
