#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "critg/coloring.hpp"
#include "critg/enumeration.hpp"
#include "critg/graph.hpp"

namespace critg {

struct ColorableCert {
    Coloring coloring;
};

// witness: vertices of the input graph inducing a copy of the named family
// member; mapping[i] is the input vertex playing member vertex i (the member
// is stored in canonical labeling, so member_g6 doubles as the family key).
struct NotColorableCert {
    VertexSet witness;
    std::string member_g6;
    std::vector<int> mapping;
};

struct Certificate {
    int k = 0;
    std::variant<ColorableCert, NotColorableCert> body;
    bool colorable() const { return std::holds_alternative<ColorableCert>(body); }
};

// The deletion loop would falsify the finiteness theorem if it ever missed.
struct FamilyMissError : std::runtime_error {
    FamilyMissError(std::string g6, int k)
        : std::runtime_error("minimized non-" + std::to_string(k) +
                             "-colorable subgraph is missing from the family "
                             "listing; this would falsify the finiteness theorem [" +
                             g6 + "]"),
          graph6(std::move(g6)) {}
    std::string graph6;
};

// Deletion loop over `order`: W starts as all vertices; x is dropped whenever
// W - x is still not k-colorable.  The result induces a vertex-minimal
// non-k-colorable subgraph, which is therefore (k+1)-critical.
// Requires chi(g) > k.
VertexSet critical_subgraph(const Graph& g, int k, const VertexSet& order);

// Certifying k-colorability: an exact coloring, or a critical induced
// subgraph matched by canonical form against family_k1 (= C_{k+1}).
// Rejects non-(P5,co-P5)-free inputs with NotFreeError.
Certificate certify_colorability(const Graph& g, int k, const Family& family_k1);

// Checks a certificate without re-running any search: properness and color
// count for YES, family membership plus an exact induced-subgraph match for
// NO.  Never throws; false means invalid.
bool verify_certificate(const Graph& g, int k, const Certificate& cert,
                        const Family& family_k1);

// Pseudo-random (P5,co-P5)-free graph grown from K1 by joins, singleton
// substitutions and complementation; deterministic in seed, at most
// size_budget vertices.
Graph random_free_graph(std::uint64_t seed, int size_budget);

std::string emit_certificate(const Graph& g, const Certificate& cert);

struct ParsedCertificate {
    Graph graph;
    Certificate cert;
};
ParsedCertificate parse_certificate(std::string_view text);

}  // namespace critg
