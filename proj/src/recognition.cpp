#include "critg/recognition.hpp"

#include <algorithm>

#include "critg/graph6.hpp"

namespace critg {

namespace {

// Labeled 5-vertex graphs are encoded as 10-bit codes over the pairs
// (0,1),(0,2),(1,2),(0,3),... in column-major order.  The tables below mark
// every code isomorphic to P5, C5 or co-P5; a 5-subset scan then reduces to
// one table lookup per subset.
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

struct IsoTables {
    std::array<unsigned char, 1024> flags{};  // 1 = P5, 2 = C5, 4 = co-P5
    IsoTables() {
        std::array<int, 5> perm{0, 1, 2, 3, 4};
        do {
            int p5 = 0, c5 = 0;
            for (int e = 0; e + 1 < 5; ++e) {
                int a = perm[e], b = perm[e + 1];
                p5 |= 1 << pair_bit(std::min(a, b), std::max(a, b));
            }
            c5 = p5 | (1 << pair_bit(std::min(perm[0], perm[4]),
                                     std::max(perm[0], perm[4])));
            flags[p5] |= 1;
            flags[c5] |= 2;
            flags[~p5 & 1023] |= 4;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

const IsoTables tables;

// Calls visit(code, a,b,c,d,e) for every 5-subset; stops when visit returns true.
template <typename F>
bool scan_subsets(const Graph& g, F&& visit) {
    int n = g.size();
    for (int a = 0; a + 4 < n; ++a)
        for (int b = a + 1; b + 3 < n; ++b) {
            int ab = g.adjacent(a, b);
            for (int c = b + 1; c + 2 < n; ++c) {
                int abc = ab | g.adjacent(a, c) << 1 | g.adjacent(b, c) << 2;
                for (int d = c + 1; d + 1 < n; ++d) {
                    int abcd = abc | g.adjacent(a, d) << 3 | g.adjacent(b, d) << 4 |
                               g.adjacent(c, d) << 5;
                    for (int e = d + 1; e < n; ++e) {
                        int code = abcd | g.adjacent(a, e) << 6 | g.adjacent(b, e) << 7 |
                                   g.adjacent(c, e) << 8 | g.adjacent(d, e) << 9;
                        if (visit(code, a, b, c, d, e)) return true;
                    }
                }
            }
        }
    return false;
}

// Order the subset so it induces the reference structure: a path for P5
// (optionally in the complement) or a cycle for C5.
std::array<int, 5> order_subset(const Graph& g, std::array<int, 5> vs, bool cycle,
                                bool complemented) {
    std::array<int, 5> idx{0, 1, 2, 3, 4};
    std::sort(vs.begin(), vs.end());
    do {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = i + 1; j < 5 && ok; ++j) {
                bool want = (j == i + 1) || (cycle && i == 0 && j == 4);
                bool have = g.adjacent(vs[idx[i]], vs[idx[j]]);
                if (complemented) have = !have;
                if (want != have) ok = false;
            }
        if (ok) {
            std::array<int, 5> out;
            for (int i = 0; i < 5; ++i) out[i] = vs[idx[i]];
            return out;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    throw std::logic_error("order_subset: subset does not induce the target");
}

}  // namespace

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    std::optional<std::array<int, 5>> out;
    scan_subsets(g, [&](int code, int a, int b, int c, int d, int e) {
        if (!(tables.flags[code] & 1)) return false;
        out = order_subset(g, {a, b, c, d, e}, false, false);
        return true;
    });
    return out;
}

std::optional<std::array<int, 5>> find_c5(const Graph& g) {
    std::optional<std::array<int, 5>> out;
    scan_subsets(g, [&](int code, int a, int b, int c, int d, int e) {
        if (!(tables.flags[code] & 2)) return false;
        out = order_subset(g, {a, b, c, d, e}, true, false);
        return true;
    });
    return out;
}

std::vector<std::array<int, 5>> find_all_c5(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    scan_subsets(g, [&](int code, int a, int b, int c, int d, int e) {
        if (tables.flags[code] & 2)
            out.push_back(order_subset(g, {a, b, c, d, e}, true, false));
        return false;
    });
    return out;
}

FreenessCheck is_p5_p5bar_free(const Graph& g) {
    FreenessCheck out;
    scan_subsets(g, [&](int code, int a, int b, int c, int d, int e) {
        unsigned char f = tables.flags[code];
        if (!(f & (1 | 4))) return false;
        out.free = false;
        out.witness.in_complement = !(f & 1);
        out.witness.vertices =
            order_subset(g, {a, b, c, d, e}, false, out.witness.in_complement);
        return true;
    });
    return out;
}

VertexSet PseudoBuoy::vertices() const {
    VertexSet all;
    for (const auto& bag : bags) all.insert(all.end(), bag.begin(), bag.end());
    std::sort(all.begin(), all.end());
    return all;
}

VertexSet Buoy::vertices() const {
    VertexSet all;
    for (const auto& bag : bags) all.insert(all.end(), bag.begin(), bag.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool is_valid_pseudo_buoy(const Graph& g, const std::array<VertexSet, 5>& bags,
                          bool allow_empty) {
    std::vector<int> owner(g.size(), -1);
    for (int i = 0; i < 5; ++i) {
        if (!allow_empty && bags[i].empty()) return false;
        for (int v : bags[i]) {
            if (v < 0 || v >= g.size() || owner[v] != -1) return false;
            owner[v] = i;
        }
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == 4);
            for (int u : bags[i])
                for (int v : bags[j])
                    if (g.adjacent(u, v) != consecutive) return false;
        }
    return true;
}

Buoy grow_buoy(const Graph& g, const std::array<int, 5>& c5) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == 4);
            if (c5[i] == c5[j] || g.adjacent(c5[i], c5[j]) != consecutive)
                throw std::invalid_argument("grow_buoy: seed is not a C5 in cyclic order");
        }

    int words = g.stride();
    std::array<std::vector<std::uint64_t>, 5> bag_mask;
    Buoy buoy;
    std::vector<bool> used(g.size(), false);
    for (int i = 0; i < 5; ++i) {
        bag_mask[i].assign(words, 0);
        bag_mask[i][c5[i] >> 6] |= 1ull << (c5[i] & 63);
        buoy.bags[i] = {c5[i]};
        used[c5[i]] = true;
    }

    auto complete_to = [&](int v, const std::vector<std::uint64_t>& mask) {
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < words; ++w)
            if ((r[w] & mask[w]) != mask[w]) return false;
        return true;
    };
    auto anticomplete_to = [&](int v, const std::vector<std::uint64_t>& mask) {
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < words; ++w)
            if (r[w] & mask[w]) return false;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.size(); ++v) {
            if (used[v]) continue;
            for (int i = 0; i < 5; ++i) {
                if (complete_to(v, bag_mask[(i + 4) % 5]) &&
                    complete_to(v, bag_mask[(i + 1) % 5]) &&
                    anticomplete_to(v, bag_mask[(i + 2) % 5]) &&
                    anticomplete_to(v, bag_mask[(i + 3) % 5])) {
                    buoy.bags[i].push_back(v);
                    bag_mask[i][v >> 6] |= 1ull << (v & 63);
                    used[v] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (auto& bag : buoy.bags) std::sort(bag.begin(), bag.end());

    if (!is_valid_pseudo_buoy(g, buoy.bags, false))
        throw std::runtime_error("grow_buoy: absorption produced an invalid buoy on " +
                                 emit_graph6(g));
    VertexSet vs = buoy.vertices();
    if (static_cast<int>(vs.size()) != g.size() && !is_module(g, vs))
        throw std::runtime_error("grow_buoy: buoy is neither full nor a module on " +
                                 emit_graph6(g));
    return buoy;
}

std::optional<Buoy> classify(const Graph& g) {
    FreenessCheck fc = is_p5_p5bar_free(g);
    if (!fc.free) throw NotFreeError(fc.witness);
    auto c5 = find_c5(g);
    if (!c5) return std::nullopt;
    return grow_buoy(g, *c5);
}

}  // namespace critg
