#pragma once

#include <map>
#include <string>
#include <vector>

#include "critg/enumeration.hpp"
#include "critg/graph.hpp"

namespace critg {

struct CheckOptions {
    // Exhaustive module enumeration is 2^n; members above this size skip the
    // module-based checks (family levels k <= 6 stay well below it).
    int module_scan_max_n = 24;
    bool check_criticality = true;
};

// Runs every invariant the enumerated families must satisfy on one claimed
// member of C_k and returns the names of the checks that failed:
//   free, critical, connected, no-comparable-pair, no-clique-cutset,
//   buoy-full-or-module, module-criticality, join-criticality,
//   substitution-criticality.
std::vector<std::string> check_member(const Graph& g, int k,
                                      const CheckOptions& opts = {});

// All nontrivial modules (2 <= |M| < n) by exhaustive subset scan.
std::vector<VertexSet> all_nontrivial_modules(const Graph& g);

struct SuiteRow {
    std::string check;
    int k = 0;
    int checked = 0;
    int failures = 0;
    std::vector<std::string> failing;  // graph6 of offenders, capped
};

struct SuiteReport {
    std::vector<SuiteRow> rows;
    bool ok() const {
        for (const auto& r : rows)
            if (r.failures > 0) return false;
        return true;
    }
};

SuiteReport run_lemma_suite(const std::map<int, Family>& families, int max_k,
                            const CheckOptions& opts = {});

}  // namespace critg
