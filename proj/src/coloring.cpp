#include "critg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace critg {

bool is_proper(const Graph& g, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != g.size()) return false;
    for (int v : coloring)
        if (v < 1) return false;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) && coloring[u] == coloring[v]) return false;
    return true;
}

int color_count(const Coloring& coloring) {
    std::vector<int> seen;
    for (int c : coloring)
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    return static_cast<int>(seen.size());
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::vector<std::vector<int>> adj;
    VertexSet best;

    explicit CliqueSearch(const Graph& graph) : g(graph) {
        adj.resize(g.size());
        for (int v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
    }

    void expand(VertexSet& r, std::vector<int>& p) {
        if (p.empty()) {
            if (r.size() > best.size()) best = r;
            return;
        }
        // greedy coloring of the candidate set gives the usual bound
        std::vector<int> num(p.size());
        std::vector<std::vector<int>> classes;
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            num[i] = static_cast<int>(c) + 1;
        }
        std::vector<std::size_t> order(p.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return num[a] < num[b]; });

        std::vector<int> p_sorted(p.size());
        std::vector<int> num_sorted(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            p_sorted[i] = p[order[i]];
            num_sorted[i] = num[order[i]];
        }
        for (int i = static_cast<int>(p_sorted.size()) - 1; i >= 0; --i) {
            if (r.size() + num_sorted[i] <= best.size()) return;
            int v = p_sorted[i];
            r.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(p_sorted[j], v)) next.push_back(p_sorted[j]);
            expand(r, next);
            r.pop_back();
        }
    }
};

struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<std::vector<int>> adj;
    std::vector<std::uint64_t> domain;
    std::vector<int> assigned;
    std::vector<int> trail;
    int used = 0;

    KColorSearch(const Graph& graph, int colors) : g(graph), k(colors) {
        int n = g.size();
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
        std::uint64_t full = k >= 64 ? ~0ull : ((1ull << k) - 1);
        domain.assign(n, full);
        assigned.assign(n, -1);
    }

    bool assign(int v, int c, std::size_t& mark) {
        assigned[v] = c;
        if (c == used) ++used;
        mark = trail.size();
        for (int u : adj[v]) {
            if (assigned[u] >= 0 || !(domain[u] >> c & 1)) continue;
            domain[u] &= ~(1ull << c);
            trail.push_back(u);
            if (domain[u] == 0) return false;
        }
        return true;
    }

    void undo(int v, int c, int old_used, std::size_t mark) {
        while (trail.size() > mark) {
            domain[trail.back()] |= 1ull << c;
            trail.pop_back();
        }
        assigned[v] = -1;
        used = old_used;
    }

    bool solve(int remaining) {
        if (remaining == 0) return true;
        int cap = std::min(k, used + 1);
        std::uint64_t cap_mask = cap >= 64 ? ~0ull : ((1ull << cap) - 1);
        int pick = -1, pick_cnt = INT_MAX;
        for (int v = 0; v < g.size(); ++v) {
            if (assigned[v] >= 0) continue;
            int cnt = std::popcount(domain[v] & cap_mask);
            if (cnt == 0) return false;
            if (cnt < pick_cnt ||
                (cnt == pick_cnt && adj[v].size() > adj[pick].size())) {
                pick_cnt = cnt;
                pick = v;
            }
        }
        std::uint64_t options = domain[pick] & cap_mask;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            int old_used = used;
            std::size_t mark;
            bool alive = assign(pick, c, mark);
            if (alive && solve(remaining - 1)) return true;
            undo(pick, c, old_used, mark);
        }
        return false;
    }
};

// Smallest module containing {u,v}: absorb splitters until none remain.
// Returns all of V when the pair is "prime".
std::vector<std::uint64_t> module_closure(const Graph& g, int u, int v) {
    int words = g.stride();
    std::vector<std::uint64_t> in_s(words, 0);
    in_s[u >> 6] |= 1ull << (u & 63);
    in_s[v >> 6] |= 1ull << (v & 63);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int z = 0; z < g.size(); ++z) {
            if (in_s[z >> 6] >> (z & 63) & 1) continue;
            const std::uint64_t* r = g.row(z);
            bool any = false, all = true;
            for (int w = 0; w < words; ++w) {
                std::uint64_t overlap = r[w] & in_s[w];
                if (overlap) any = true;
                if (overlap != in_s[w]) all = false;
            }
            if (any && !all) {
                in_s[z >> 6] |= 1ull << (z & 63);
                grew = true;
            }
        }
    }
    return in_s;
}

// A nontrivial module that is not a clique, if any; collapsing such a module
// to a clique on chi(module) vertices preserves k-colorability and makes the
// graph strictly smaller.
std::optional<VertexSet> find_reducible_module(const Graph& g) {
    int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto mask = module_closure(g, u, v);
            VertexSet members;
            for (int z = 0; z < n; ++z)
                if (mask[z >> 6] >> (z & 63) & 1) members.push_back(z);
            if (static_cast<int>(members.size()) == n) continue;
            bool clique = true;
            for (std::size_t i = 0; i < members.size() && clique; ++i)
                for (std::size_t j = i + 1; j < members.size() && clique; ++j)
                    if (!g.adjacent(members[i], members[j])) clique = false;
            if (!clique) return members;
        }
    return std::nullopt;
}

}  // namespace

VertexSet max_clique(const Graph& g) {
    if (g.size() == 0) return {};
    CliqueSearch s(g);
    VertexSet r;
    std::vector<int> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    // start from high-degree vertices; improves the first bound
    std::sort(p.begin(), p.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    s.expand(r, p);
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: negative k");
    int n = g.size();
    if (n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        Coloring c(n);
        std::iota(c.begin(), c.end(), 1);
        return c;
    }
    if (k >= 64) throw std::invalid_argument("is_k_colorable: k too large for this tool");

    // collapse a non-clique module to a clique on its chromatic number; the
    // quotient is strictly smaller and k-colorable iff g is
    if (auto mod = find_reducible_module(g)) {
        Graph sub = induced_subgraph(g, *mod);
        int q = chromatic_number(sub);
        if (q > k) return std::nullopt;
        Coloring sub_coloring = *is_k_colorable(sub, q);
        Graph reduced = substitute(g, *mod, complete_graph(q));
        auto reduced_coloring = is_k_colorable(reduced, k);
        if (!reduced_coloring) return std::nullopt;
        VertexSet rest;
        {
            std::vector<bool> in_mod(n, false);
            for (int v : *mod) in_mod[v] = true;
            for (int v = 0; v < n; ++v)
                if (!in_mod[v]) rest.push_back(v);
        }
        Coloring out(n);
        for (std::size_t i = 0; i < rest.size(); ++i) out[rest[i]] = (*reduced_coloring)[i];
        for (std::size_t i = 0; i < mod->size(); ++i)
            out[(*mod)[i]] = (*reduced_coloring)[rest.size() + sub_coloring[i] - 1];
        return out;
    }

    VertexSet clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;

    KColorSearch s(g, k);
    std::size_t mark;
    for (std::size_t i = 0; i < clique.size(); ++i)
        if (!s.assign(clique[i], static_cast<int>(i), mark)) return std::nullopt;
    if (!s.solve(n - static_cast<int>(clique.size()))) return std::nullopt;

    Coloring out(n);
    for (int v = 0; v < n; ++v) out[v] = s.assigned[v] + 1;
    return out;
}

int chromatic_number(const Graph& g) {
    if (g.size() == 0) return 0;
    int lb = static_cast<int>(max_clique(g).size());
    for (int t = lb;; ++t)
        if (is_k_colorable(g, t)) return t;
}

bool is_k_critical(const Graph& g, int k) {
    if (k < 1) return false;
    if (!is_k_colorable(g, k)) return false;
    if (k >= 2 && is_k_colorable(g, k - 1)) return false;
    if (k == 1 && g.size() == 0) return false;
    for (int v = 0; v < g.size(); ++v) {
        VertexSet rest;
        for (int u = 0; u < g.size(); ++u)
            if (u != v) rest.push_back(u);
        if (!is_k_colorable(induced_subgraph(g, rest), k - 1)) return false;
    }
    return true;
}

bool pseudo_buoy_lower_bound(const Pattern& pattern, int h) {
    int sum = 0;
    for (int k : pattern) sum += k;
    return sum > 2 * h;
}

int buoy_chromatic(const Pattern& pattern) {
    int sum = 0, pair_max = 0;
    for (int i = 0; i < 5; ++i) {
        sum += pattern[i];
        pair_max = std::max(pair_max, pattern[i] + pattern[(i + 1) % 5]);
    }
    return std::max(pair_max, (sum + 1) / 2);
}

namespace {

// One level of the good-pair induction.  bags[i] lists host vertices, colors[i]
// the matching color per vertex (values arbitrary; classes are what matters).
void peel_and_color(std::array<VertexSet, 5> bags, std::array<Coloring, 5> colors,
                    int h, Coloring& out) {
    std::array<int, 5> k{};
    int nonempty = 0, sum = 0;
    for (int i = 0; i < 5; ++i) {
        k[i] = color_count(colors[i]);
        sum += k[i];
        if (!bags[i].empty()) ++nonempty;
    }
    for (int i = 0; i < 5; ++i)
        if (k[i] + k[(i + 1) % 5] > h)
            throw std::invalid_argument("color_pseudo_buoy: adjacent bags need more than h colors");
    if (sum > 2 * h)
        throw std::invalid_argument("color_pseudo_buoy: bag colors exceed 2h");

    if (nonempty <= 2) {
        // three empty bags: the rest is a join or disjoint parts
        std::vector<int> idx;
        for (int i = 0; i < 5; ++i)
            if (!bags[i].empty()) idx.push_back(i);
        std::array<int, 5> offset{};
        if (idx.size() == 2) {
            int a = idx[0], b = idx[1];
            if (b - a == 1) offset[b] = k[a];            // join: disjoint palettes
            else if (a == 0 && b == 4) offset[a] = k[b];  // 4 and 0 are consecutive
        }
        for (int i : idx) {
            // compact the bag's colors into offset[i]+1..offset[i]+k[i]
            std::vector<int> palette;
            for (std::size_t t = 0; t < bags[i].size(); ++t) {
                auto it = std::find(palette.begin(), palette.end(), colors[i][t]);
                if (it == palette.end()) {
                    palette.push_back(colors[i][t]);
                    it = palette.end() - 1;
                }
                out[bags[i][t]] = offset[i] + 1 + static_cast<int>(it - palette.begin());
            }
        }
        return;
    }

    // good pair: both bags nonempty, every tight pair meets {j, j+2}
    int gj = -1;
    for (int j = 0; j < 5 && gj < 0; ++j) {
        int j2 = (j + 2) % 5;
        if (bags[j].empty() || bags[j2].empty()) continue;
        bool good = true;
        for (int i = 0; i < 5 && good; ++i) {
            if (k[i] + k[(i + 1) % 5] != h) continue;
            int i2 = (i + 1) % 5;
            if (i != j && i != j2 && i2 != j && i2 != j2) good = false;
        }
        if (good) gj = j;
    }
    if (gj < 0) throw std::logic_error("color_pseudo_buoy: no good pair");

    for (int side : {gj, (gj + 2) % 5}) {
        // peel the color class holding the lowest-numbered vertex
        std::size_t low = 0;
        for (std::size_t t = 1; t < bags[side].size(); ++t)
            if (bags[side][t] < bags[side][low]) low = t;
        int peel = colors[side][low];
        VertexSet kept;
        Coloring kept_colors;
        for (std::size_t t = 0; t < bags[side].size(); ++t) {
            if (colors[side][t] == peel)
                out[bags[side][t]] = h;
            else {
                kept.push_back(bags[side][t]);
                kept_colors.push_back(colors[side][t]);
            }
        }
        bags[side] = std::move(kept);
        colors[side] = std::move(kept_colors);
    }
    peel_and_color(std::move(bags), std::move(colors), h - 1, out);
}

}  // namespace

Coloring color_pseudo_buoy(const Graph& host, const PseudoBuoy& pb,
                           const std::array<Coloring, 5>& bag_colorings, int h) {
    if (h < 0) throw std::invalid_argument("color_pseudo_buoy: negative h");
    if (!is_valid_pseudo_buoy(host, pb.bags, true))
        throw std::invalid_argument("color_pseudo_buoy: bags do not form a pseudo-buoy");
    std::size_t covered = 0;
    for (int i = 0; i < 5; ++i) {
        covered += pb.bags[i].size();
        if (bag_colorings[i].size() != pb.bags[i].size())
            throw std::invalid_argument("color_pseudo_buoy: bag coloring size mismatch");
        for (std::size_t t = 0; t < pb.bags[i].size(); ++t)
            for (std::size_t u = t + 1; u < pb.bags[i].size(); ++u)
                if (host.adjacent(pb.bags[i][t], pb.bags[i][u]) &&
                    bag_colorings[i][t] == bag_colorings[i][u])
                    throw std::invalid_argument("color_pseudo_buoy: improper bag coloring");
    }
    if (static_cast<int>(covered) != host.size())
        throw std::invalid_argument("color_pseudo_buoy: bags must cover the host");

    Coloring out(host.size(), 0);
    peel_and_color(pb.bags, bag_colorings, h, out);
    if (!is_proper(host, out))
        throw std::logic_error("color_pseudo_buoy: produced an improper coloring");
    return out;
}

namespace {

Coloring structural_color_unchecked(const Graph& g) {
    if (g.size() == 0) return {};

    auto factors = connected_components(complement(g));
    if (factors.size() >= 2) {
        Coloring out(g.size());
        int offset = 0;
        for (const auto& part : factors) {
            Coloring sub = structural_color_unchecked(induced_subgraph(g, part));
            for (std::size_t i = 0; i < part.size(); ++i) out[part[i]] = offset + sub[i];
            offset += color_count(sub);
        }
        return out;
    }

    auto c5 = find_c5(g);
    if (!c5) {
        // no C5 and free means perfect; desk-scale oracle finishes the job
        return *is_k_colorable(g, chromatic_number(g));
    }

    Buoy buoy = grow_buoy(g, *c5);
    std::array<Coloring, 5> bag_colorings;
    Pattern pattern;
    for (int i = 0; i < 5; ++i) {
        bag_colorings[i] = structural_color_unchecked(induced_subgraph(g, buoy.bags[i]));
        pattern[i] = color_count(bag_colorings[i]);
    }
    int h = buoy_chromatic(pattern);
    VertexSet bvs = buoy.vertices();

    if (static_cast<int>(bvs.size()) == g.size())
        return color_pseudo_buoy(g, PseudoBuoy{buoy.bags}, bag_colorings, h);

    // proper module: color the buoy alone, collapse it to K_h, recurse
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < bvs.size(); ++i) local[bvs[i]] = static_cast<int>(i);
    PseudoBuoy local_pb;
    for (int i = 0; i < 5; ++i)
        for (int v : buoy.bags[i]) local_pb.bags[i].push_back(local[v]);
    Coloring buoy_coloring =
        color_pseudo_buoy(induced_subgraph(g, bvs), local_pb, bag_colorings, h);

    Graph reduced = substitute(g, bvs, complete_graph(h));
    Coloring rc = structural_color_unchecked(reduced);

    VertexSet rest;
    for (int v = 0; v < g.size(); ++v)
        if (local[v] < 0) rest.push_back(v);
    Coloring out(g.size());
    for (std::size_t i = 0; i < rest.size(); ++i) out[rest[i]] = rc[i];
    std::vector<int> clique_colors(h);
    for (int t = 0; t < h; ++t) clique_colors[t] = rc[rest.size() + t];
    for (std::size_t i = 0; i < bvs.size(); ++i)
        out[bvs[i]] = clique_colors[buoy_coloring[i] - 1];
    return out;
}

}  // namespace

Coloring structural_color(const Graph& g) {
    FreenessCheck fc = is_p5_p5bar_free(g);
    if (!fc.free) throw NotFreeError(fc.witness);
    Coloring out = structural_color_unchecked(g);
    if (!is_proper(g, out) && g.size() > 0)
        throw std::logic_error("structural_color: produced an improper coloring");
    return out;
}

}  // namespace critg
