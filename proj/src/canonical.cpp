#include "critg/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "critg/graph6.hpp"

namespace critg {

namespace {

using Cells = std::vector<std::vector<int>>;

// Order-preserving equitable refinement: repeatedly split every cell by the
// vector of neighbor counts into all current cells, subcells ordered by
// ascending count vector.  Cell order is label-invariant, which makes the
// whole search tree isomorphism-equivariant.
void refine(const Graph& g, Cells& cells) {
    int n = g.size();
    std::vector<int> color(n, 0);
    std::vector<std::vector<int>> cnts(n);
    for (;;) {
        int ncells = static_cast<int>(cells.size());
        for (int c = 0; c < ncells; ++c)
            for (int v : cells[c]) color[v] = c;
        for (int v = 0; v < n; ++v) {
            cnts[v].assign(ncells, 0);
            const std::uint64_t* r = g.row(v);
            for (int w = 0; w < g.stride(); ++w) {
                std::uint64_t word = r[w];
                while (word) {
                    int u = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    ++cnts[v][color[u]];
                }
            }
        }
        Cells next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::sort(cell.begin(), cell.end(),
                      [&](int a, int b) { return cnts[a] < cnts[b]; });
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
                if (i == cell.size() || cnts[cell[i]] != cnts[cell[start]]) {
                    next.emplace_back(cell.begin() + start, cell.begin() + i);
                    start = i;
                }
            }
        }
        bool changed = next.size() != cells.size();
        cells = std::move(next);
        if (!changed) break;
    }
}

struct Search {
    const Graph& g;
    int n;
    std::vector<int> lab;             // lab[pos] = vertex, valid for pos < m
    std::vector<std::uint64_t> cur;   // column-major upper-triangle bits
    std::vector<std::uint64_t> best;
    std::vector<int> best_lab;
    bool have_best = false;
    // automorphisms discovered at equal-to-best leaves; used to branch only
    // once per orbit, which tames highly symmetric graphs
    std::vector<std::vector<int>> autos;

    explicit Search(const Graph& graph) : g(graph), n(graph.size()) {
        lab.assign(n, -1);
        std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
        cur.assign(total / 64 + 1, 0);
    }

    void record_automorphism() {
        std::vector<int> pi(n);
        bool identity = true;
        for (int p = 0; p < n; ++p) {
            pi[best_lab[p]] = lab[p];
            if (best_lab[p] != lab[p]) identity = false;
        }
        if (identity || autos.size() >= 256) return;
        for (const auto& known : autos)
            if (known == pi) return;
        autos.push_back(std::move(pi));
    }

    // Write bits for columns [from, to) of the candidate labeling and compare
    // them against the best leaf.  Returns +1 as soon as the candidate is
    // lexicographically larger (caller prunes), -1 if smaller, 0 if equal.
    int append_and_compare(int from, int to) {
        int cmp = 0;
        for (int j = from; j < to; ++j) {
            std::size_t base = static_cast<std::size_t>(j) * (j - 1) / 2;
            for (int i = 0; i < j; ++i) {
                std::size_t p = base + i;
                std::uint64_t mask = 1ull << (p & 63);
                int bit = g.adjacent(lab[i], lab[j]) ? 1 : 0;
                if (bit)
                    cur[p >> 6] |= mask;
                else
                    cur[p >> 6] &= ~mask;
                if (cmp == 0 && have_best) {
                    int bb = (best[p >> 6] & mask) ? 1 : 0;
                    if (bit != bb) {
                        if (bit > bb) return 1;
                        cmp = -1;
                    }
                }
            }
        }
        return cmp;
    }

    void run(Cells cells, int m_parent) {
        refine(g, cells);
        int m = 0;
        while (m < static_cast<int>(cells.size()) && cells[m].size() == 1) ++m;
        for (int i = m_parent; i < m; ++i) lab[i] = cells[i][0];
        int cmp = append_and_compare(m_parent, m);
        if (cmp > 0) return;
        if (cmp < 0) have_best = false;
        if (m == static_cast<int>(cells.size())) {
            // discrete partition; an equal-to-best leaf is an automorphism
            if (!have_best) {
                best = cur;
                best_lab.assign(lab.begin(), lab.end());
                have_best = true;
            } else {
                record_automorphism();
            }
            return;
        }

        // orbits of the generators that fix the current prefix pointwise
        std::vector<int> parent(n);
        std::vector<char> explored_root(n, 0);
        std::vector<int> explored;
        auto root_of = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto rebuild_orbits = [&] {
            for (int v = 0; v < n; ++v) parent[v] = v;
            for (const auto& pi : autos) {
                bool fixes = true;
                for (int p = 0; p < m && fixes; ++p)
                    if (pi[lab[p]] != lab[p]) fixes = false;
                if (!fixes) continue;
                for (int v = 0; v < n; ++v) {
                    int a = root_of(v), b = root_of(pi[v]);
                    if (a != b) parent[a] = b;
                }
            }
            std::fill(explored_root.begin(), explored_root.end(), 0);
            for (int v : explored) explored_root[root_of(v)] = 1;
        };
        rebuild_orbits();
        std::size_t known_autos = autos.size();

        const std::vector<int> target = cells[m];
        for (int v : target) {
            if (autos.size() != known_autos) {
                known_autos = autos.size();
                rebuild_orbits();
            }
            if (explored_root[root_of(v)]) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (int c = 0; c < m; ++c) child.push_back(cells[c]);
            child.push_back({v});
            std::vector<int> rest;
            rest.reserve(target.size() - 1);
            for (int u : target)
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (std::size_t c = m + 1; c < cells.size(); ++c) child.push_back(cells[c]);
            explored.push_back(v);
            explored_root[root_of(v)] = 1;
            run(std::move(child), m);
        }
    }
};

}  // namespace

Graph apply_labeling(const Graph& g, const std::vector<int>& labeling) {
    GraphBuilder b(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) b.add_edge(labeling[u], labeling[v]);
    return b.build();
}

CanonicalForm canonical_form(const Graph& g) {
    Search s(g);
    Cells cells;
    if (g.size() > 0) {
        std::vector<int> all(g.size());
        for (int v = 0; v < g.size(); ++v) all[v] = v;
        cells.push_back(std::move(all));
    }
    s.run(std::move(cells), 0);
    CanonicalForm out;
    out.labeling.assign(g.size(), 0);
    for (int pos = 0; pos < g.size(); ++pos) out.labeling[s.best_lab[pos]] = pos;
    out.bytes = emit_graph6(apply_labeling(g, out.labeling));
    return out;
}

Graph canonical_graph(const Graph& g) {
    return apply_labeling(g, canonical_form(g).labeling);
}

}  // namespace critg
