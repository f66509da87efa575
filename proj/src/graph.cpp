#include "critg/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace critg {

namespace {

int words_for(int n) { return n == 0 ? 1 : (n + 63) / 64; }

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.size())
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(g.size()));
}

// true iff (row & mask) == mask over all words
bool contains_all(const std::uint64_t* row, const std::uint64_t* mask, int words) {
    for (int w = 0; w < words; ++w)
        if ((row[w] & mask[w]) != mask[w]) return false;
    return true;
}

bool intersects(const std::uint64_t* row, const std::uint64_t* mask, int words) {
    for (int w = 0; w < words; ++w)
        if (row[w] & mask[w]) return true;
    return false;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    stride_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    for (auto [u, v] : edges) {
        check_vertex(*this, u, "Graph");
        check_vertex(*this, v, "Graph");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
    }
}

int Graph::edge_count() const {
    int deg = 0;
    for (std::uint64_t w : bits_) deg += std::popcount(w);
    return deg / 2;
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < stride_; ++w) d += std::popcount(r[w]);
    return d;
}

VertexSet Graph::neighbors(int v) const {
    VertexSet out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    check_vertex(g_, u, "add_edge");
    check_vertex(g_, v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    g_.bits_[static_cast<std::size_t>(u) * g_.stride_ + (v >> 6)] |= 1ull << (v & 63);
    g_.bits_[static_cast<std::size_t>(v) * g_.stride_ + (u >> 6)] |= 1ull << (u & 63);
}

void GraphBuilder::toggle_edge(int u, int v) {
    check_vertex(g_, u, "toggle_edge");
    check_vertex(g_, v, "toggle_edge");
    if (u == v) throw std::invalid_argument("toggle_edge: self-loop");
    g_.bits_[static_cast<std::size_t>(u) * g_.stride_ + (v >> 6)] ^= 1ull << (v & 63);
    g_.bits_[static_cast<std::size_t>(v) * g_.stride_ + (u >> 6)] ^= 1ull << (u & 63);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    if (n >= 3) b.add_edge(n - 1, 0);
    return b.build();
}

Graph complement(const Graph& g) {
    int n = g.size();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.size(), m = h.size();
    GraphBuilder b(n + m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) b.add_edge(u, v);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (h.adjacent(u, v)) b.add_edge(n + u, n + v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) b.add_edge(u, n + v);
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (int v : s) check_vertex(g, v, "induced_subgraph");
    int m = static_cast<int>(s.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
    return b.build();
}

bool is_module(const Graph& g, const VertexSet& x) {
    for (int v : x) check_vertex(g, v, "is_module");
    int words = g.stride();
    std::vector<std::uint64_t> mask(words, 0), in_x(words, 0);
    for (int v : x) in_x[v >> 6] |= 1ull << (v & 63);
    mask = in_x;
    for (int v = 0; v < g.size(); ++v) {
        if (in_x[v >> 6] >> (v & 63) & 1) continue;
        if (intersects(g.row(v), mask.data(), words) &&
            !contains_all(g.row(v), mask.data(), words))
            return false;
    }
    return true;
}

Graph substitute(const Graph& g, const VertexSet& m, const Graph& h) {
    if (m.empty()) throw std::invalid_argument("substitute: empty module");
    for (int v : m) check_vertex(g, v, "substitute");
    if (m.size() > 1 && !is_module(g, m))
        throw std::invalid_argument("substitute: set is not a module");

    std::vector<bool> in_m(g.size(), false);
    for (int v : m) in_m[v] = true;
    VertexSet rest;
    for (int v = 0; v < g.size(); ++v)
        if (!in_m[v]) rest.push_back(v);

    int nr = static_cast<int>(rest.size());
    int nh = h.size();
    GraphBuilder b(nr + nh);
    for (int i = 0; i < nr; ++i)
        for (int j = i + 1; j < nr; ++j)
            if (g.adjacent(rest[i], rest[j])) b.add_edge(i, j);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.adjacent(u, v)) b.add_edge(nr + u, nr + v);
    // every former neighbor of m (equivalently, of m[0]) becomes complete to h
    for (int i = 0; i < nr; ++i) {
        if (!g.adjacent(rest[i], m[0])) continue;
        for (int v = 0; v < nh; ++v) b.add_edge(i, nr + v);
    }
    return b.build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.size();
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        VertexSet stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < n; ++u)
                if (!seen[u] && g.adjacent(v, u)) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    return connected_components(g).size() == 1;
}

std::optional<std::pair<int, int>> has_comparable_pair(const Graph& g) {
    int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            bool dominated = true;
            for (int w = 0; w < n && dominated; ++w)
                if (g.adjacent(u, w) && !g.adjacent(v, w)) dominated = false;
            if (dominated) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

namespace {

// enumerate cliques (including the empty one) until `visit` returns true
bool enumerate_cliques(const Graph& g, VertexSet& clique, int next,
                       const std::function<bool(const VertexSet&)>& visit) {
    if (visit(clique)) return true;
    for (int v = next; v < g.size(); ++v) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        clique.push_back(v);
        if (enumerate_cliques(g, clique, v + 1, visit)) return true;
        clique.pop_back();
    }
    return false;
}

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
    int n = g.size();
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            if (start < 0) start = v;
            ++remaining;
        }
    if (remaining <= 1) return true;
    std::vector<bool> seen(n, false);
    VertexSet stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!removed[u] && !seen[u] && g.adjacent(v, u)) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == remaining;
}

}  // namespace

std::optional<VertexSet> has_clique_cutset(const Graph& g) {
    std::optional<VertexSet> found;
    VertexSet clique;
    std::vector<bool> removed(g.size(), false);
    enumerate_cliques(g, clique, 0, [&](const VertexSet& c) {
        if (static_cast<int>(c.size()) >= g.size()) return false;
        std::fill(removed.begin(), removed.end(), false);
        for (int v : c) removed[v] = true;
        if (!connected_without(g, removed)) {
            found = c;
            return true;
        }
        return false;
    });
    return found;
}

}  // namespace critg
