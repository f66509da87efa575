#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critg/graph.hpp"

namespace critg {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// One graph per line, bit-exact per the published graph6 format.  The
// ">>graph6<<" header is accepted on input and never emitted.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace critg
