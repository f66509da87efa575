#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "critg/graph.hpp"

namespace critg {

// Five vertices inducing P5 in g (path order) or inducing its complement
// (path order in the complement).
struct ForbiddenWitness {
    std::array<int, 5> vertices{};
    bool in_complement = false;
};

struct NotFreeError : std::invalid_argument {
    explicit NotFreeError(const ForbiddenWitness& w)
        : std::invalid_argument(w.in_complement ? "graph contains an induced co-P5"
                                                : "graph contains an induced P5"),
          witness(w) {}
    ForbiddenWitness witness;
};

// Vertices inducing a path on 5 vertices, in path order, or absent.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);

// Vertices inducing a C5, in cyclic order, or absent.
std::optional<std::array<int, 5>> find_c5(const Graph& g);

// Every induced C5, each in cyclic order.
std::vector<std::array<int, 5>> find_all_c5(const Graph& g);

struct FreenessCheck {
    bool free = true;
    ForbiddenWitness witness;  // meaningful only when !free
};
FreenessCheck is_p5_p5bar_free(const Graph& g);

// Five cyclically ordered bags; consecutive bags are complete to each other,
// non-consecutive bags anticomplete, within-bag adjacency unconstrained.
// A Buoy has all bags nonempty; a PseudoBuoy permits empty ones.
struct PseudoBuoy {
    std::array<VertexSet, 5> bags;
    VertexSet vertices() const;
};
struct Buoy {
    std::array<VertexSet, 5> bags;
    VertexSet vertices() const;
};

bool is_valid_pseudo_buoy(const Graph& g, const std::array<VertexSet, 5>& bags,
                          bool allow_empty);

// Grow the C5 into a maximal buoy by fixed-point absorption: an outside
// vertex joins bag i when it is complete to bags i-1 and i+1 and anticomplete
// to bags i+2 and i+3.  On a (P5,co-P5)-free host the result's vertex set is
// all of V or a module of g; that postcondition is asserted and a violation
// throws std::runtime_error.
Buoy grow_buoy(const Graph& g, const std::array<int, 5>& c5);

// Classification step: a grown buoy when g contains a C5, otherwise nullopt,
// meaning g is perfect.  Checks the freeness precondition and throws
// NotFreeError on violation.
std::optional<Buoy> classify(const Graph& g);

}  // namespace critg
