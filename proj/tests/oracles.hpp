#pragma once

// Test-only oracles, deliberately independent of the library's canonical
// form, coloring search and subgraph detection paths.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "critg/graph.hpp"

namespace oracles {

// Complete backtracking search over vertex bijections with degree pruning.
inline bool extend_iso(const critg::Graph& a, const critg::Graph& b,
                       std::vector<int>& map, std::vector<bool>& used, int v) {
    if (v == a.size()) return true;
    for (int w = 0; w < b.size(); ++w) {
        if (used[w] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_iso(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

inline bool brute_force_isomorphic(const critg::Graph& a, const critg::Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(b.size(), false);
    return extend_iso(a, b, map, used, 0);
}

// Exhaustive k^n assignment enumeration; usable for n <= 8, small k.
inline bool exhaustive_k_colorable(const critg::Graph& g, int k) {
    int n = g.size();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<int> c(n, 0);
    for (;;) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n && proper; ++v)
                if (g.adjacent(u, v) && c[u] == c[v]) proper = false;
        if (proper) return true;
        int i = 0;
        while (i < n && c[i] == k - 1) c[i++] = 0;
        if (i == n) return false;
        ++c[i];
    }
}

// Independent freeness check: every 5-subset is tested for isomorphism to
// P5 or its complement via the permutation oracle above.
inline bool subsets_p5_p5bar_free(const critg::Graph& g) {
    const critg::Graph p5 = critg::path_graph(5);
    const critg::Graph p5bar = critg::complement(p5);
    int n = g.size();
    std::array<int, 5> s{};
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
                        critg::Graph sub = critg::induced_subgraph(
                            g, critg::VertexSet(s.begin(), s.end()));
                        if (brute_force_isomorphic(sub, p5) ||
                            brute_force_isomorphic(sub, p5bar))
                            return false;
                    }
    return true;
}

inline critg::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    critg::GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

inline critg::Graph random_relabel(std::mt19937_64& rng, const critg::Graph& g) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    critg::GraphBuilder b(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) b.add_edge(perm[u], perm[v]);
    return b.build();
}

}  // namespace oracles
