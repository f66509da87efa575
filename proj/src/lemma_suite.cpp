#include "critg/lemma_suite.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "critg/coloring.hpp"
#include "critg/graph6.hpp"
#include "critg/recognition.hpp"

namespace critg {

std::vector<VertexSet> all_nontrivial_modules(const Graph& g) {
    int n = g.size();
    std::vector<VertexSet> out;
    if (n < 3) return out;
    std::vector<std::uint32_t> rows(n, 0);
    for (int z = 0; z < n; ++z)
        for (int u = 0; u < n; ++u)
            if (g.adjacent(z, u)) rows[z] |= 1u << u;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 2 || size >= n) continue;
        bool module = true;
        for (int z = 0; z < n && module; ++z) {
            if (mask >> z & 1) continue;
            std::uint32_t overlap = rows[z] & mask;
            if (overlap != 0 && overlap != mask) module = false;
        }
        if (!module) continue;
        VertexSet members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::string> check_member(const Graph& g, int k, const CheckOptions& opts) {
    std::vector<std::string> failed;
    auto record = [&](const char* name, bool ok) {
        if (!ok) failed.push_back(name);
    };

    bool free = is_p5_p5bar_free(g).free;
    record("free", free);
    if (opts.check_criticality) record("critical", is_k_critical(g, k));
    record("connected", is_connected(g));
    record("no-comparable-pair", !has_comparable_pair(g).has_value());
    record("no-clique-cutset", !has_clique_cutset(g).has_value());

    // Every C5 must grow into a buoy that is full or a module (only sound on
    // free graphs; a freeness failure above already damns the member).
    if (free) {
        bool buoys_ok = true;
        try {
            for (const auto& c5 : find_all_c5(g)) (void)grow_buoy(g, c5);
        } catch (const std::exception&) {
            buoys_ok = false;
        }
        record("buoy-full-or-module", buoys_ok);
    }

    if (g.size() <= opts.module_scan_max_n) {
        auto modules = all_nontrivial_modules(g);
        bool modules_critical = true;
        bool substitutions_critical = true;
        for (const VertexSet& m : modules) {
            Graph sub = induced_subgraph(g, m);
            int ell = chromatic_number(sub);
            if (ell >= k || !is_k_critical(sub, ell)) modules_critical = false;
            if (!is_k_critical(substitute(g, m, complete_graph(ell)), k))
                substitutions_critical = false;
            if (!modules_critical && !substitutions_critical) break;
        }
        record("module-criticality", modules_critical);
        record("substitution-criticality", substitutions_critical);
    }

    auto factors = connected_components(complement(g));
    if (factors.size() >= 2) {
        bool join_ok = true;
        int chi_sum = 0;
        for (const auto& part : factors) {
            Graph factor = induced_subgraph(g, part);
            int chi = chromatic_number(factor);
            chi_sum += chi;
            if (!is_k_critical(factor, chi)) join_ok = false;
        }
        if (chi_sum != k) join_ok = false;
        record("join-criticality", join_ok);
    }

    return failed;
}

SuiteReport run_lemma_suite(const std::map<int, Family>& families, int max_k,
                            const CheckOptions& opts) {
    SuiteReport report;
    const std::vector<std::string> names{
        "free",          "critical",           "connected",
        "no-comparable-pair", "no-clique-cutset", "buoy-full-or-module",
        "module-criticality", "substitution-criticality", "join-criticality"};
    for (int k = 1; k <= max_k; ++k) {
        std::map<std::string, SuiteRow> rows;
        for (const std::string& name : names) rows[name] = SuiteRow{name, k, 0, 0, {}};
        auto it = families.find(k);
        if (it == families.end()) continue;
        for (const auto& [key, member] : it->second.members) {
            auto failed = check_member(member.graph, k, opts);
            for (const std::string& name : names) {
                bool applicable = true;
                if (name == "join-criticality")
                    applicable = !is_connected(complement(member.graph));
                if ((name == "module-criticality" ||
                     name == "substitution-criticality") &&
                    member.graph.size() > opts.module_scan_max_n)
                    applicable = false;
                if (name == "critical" && !opts.check_criticality) applicable = false;
                if (!applicable) continue;
                SuiteRow& row = rows[name];
                ++row.checked;
                if (std::find(failed.begin(), failed.end(), name) != failed.end()) {
                    ++row.failures;
                    if (row.failing.size() < 8) row.failing.push_back(key);
                }
            }
        }
        for (const std::string& name : names) report.rows.push_back(rows[name]);
    }
    return report;
}

}  // namespace critg
