#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "critg/coloring.hpp"
#include "critg/graph.hpp"

namespace critg {

enum class Origin { base, join, buoy };

struct Member {
    Graph graph;  // stored in canonical labeling
    Origin origin = Origin::base;
};

// The family C_k of canonical k-critical members, keyed by canonical graph6
// line.  Join-built members (J_k) have disconnected complements, buoy-built
// members (B_k) connected ones; K_1 is the primitive base.
struct Family {
    int k = 0;
    std::map<std::string, Member> members;
    std::vector<Pattern> patterns;         // dihedral-reduced list used at this level
    std::map<Pattern, int> pattern_counts; // construction-2 members per pattern
    int verify_depth = -1;                 // criticality fully verified iff k <= this
    double runtime_seconds = 0.0;

    int f() const { return static_cast<int>(members.size()); }
    int b() const;
    int j() const;
    bool contains(const std::string& canonical_g6) const {
        return members.count(canonical_g6) > 0;
    }
};

struct VerificationError : std::runtime_error {
    VerificationError(const std::string& what, std::string g6)
        : std::runtime_error(what + " [" + g6 + "]"), graph6(std::move(g6)) {}
    std::string graph6;
};

// Bags in cyclic order; consecutive bags complete, non-consecutive anticomplete.
Graph assemble_buoy(const std::array<Graph, 5>& bags);

// Representative of the pattern's orbit under rotation and reflection.
Pattern dihedral_min(const Pattern& p);

// All patterns for level k: five positive entries, adjacent sums <= k-1
// cyclically, total 2k-1; reduced to dihedral representatives, sorted.
// Requires k >= 3.
std::vector<Pattern> enumerate_patterns(int k);

std::map<int, Family> base_families();  // k = 1, 2, 3

std::map<std::string, Member> build_buoys(int k, const std::map<int, Family>& lower,
                                          std::map<Pattern, int>* pattern_counts = nullptr);

// J_k as C_1 x C_{k-1} together with all joins of buoy-built members over the
// partitions of k into at least two parts, each >= 3.
std::map<std::string, Member> build_joins(int k, const std::map<int, Family>& lower);

// Asserts that the decomposition above reproduces the naive join enumeration
// over every split k = k1 + k2.
bool cross_check_naive_joins(int k, const std::map<int, Family>& families);

struct EnumerateOptions {
    int verify_depth = 6;      // full criticality checks up to here
    double sample_rate = 0.05; // criticality sampling beyond verify_depth
    std::uint64_t seed = 0;
    std::string cache_dir;     // empty: no persistence
    bool cross_check = true;
};

// Recursively builds (or loads from cache) C_1..C_k, verifying freeness of
// every member and criticality per the depth/sampling policy.  Throws
// VerificationError naming the offending graph on any failure.
std::map<int, Family> enumerate_families(int k, const EnumerateOptions& opts = {});

void save_family(const Family& family, const std::string& dir);
bool family_cached(int k, const std::string& dir);
Family load_family(int k, const std::string& dir);

}  // namespace critg
