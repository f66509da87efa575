#include "critg/certify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "critg/canonical.hpp"
#include "critg/graph6.hpp"
#include "critg/recognition.hpp"

namespace critg {

VertexSet critical_subgraph(const Graph& g, int k, const VertexSet& order) {
    if (static_cast<int>(order.size()) != g.size())
        throw std::invalid_argument("critical_subgraph: order must list every vertex");
    VertexSet current;
    for (int v = 0; v < g.size(); ++v) current.push_back(v);
    if (is_k_colorable(g, k))
        throw std::invalid_argument("critical_subgraph: graph is k-colorable");
    for (int x : order) {
        VertexSet without;
        for (int v : current)
            if (v != x) without.push_back(v);
        if (!is_k_colorable(induced_subgraph(g, without), k)) current = std::move(without);
    }
    return current;
}

Certificate certify_colorability(const Graph& g, int k, const Family& family_k1) {
    if (k < 0) throw std::invalid_argument("certify_colorability: negative k");
    if (family_k1.k != k + 1)
        throw std::invalid_argument("certify_colorability: family level must be k+1");
    FreenessCheck fc = is_p5_p5bar_free(g);
    if (!fc.free) throw NotFreeError(fc.witness);

    if (auto coloring = is_k_colorable(g, k))
        return Certificate{k, ColorableCert{std::move(*coloring)}};

    VertexSet order(g.size());
    for (int v = 0; v < g.size(); ++v) order[v] = v;
    VertexSet witness = critical_subgraph(g, k, order);

    Graph sub = induced_subgraph(g, witness);
    CanonicalForm cf = canonical_form(sub);
    if (!family_k1.contains(cf.bytes)) throw FamilyMissError(cf.bytes, k);

    std::vector<int> mapping(witness.size());
    for (std::size_t local = 0; local < witness.size(); ++local)
        mapping[cf.labeling[local]] = witness[local];
    return Certificate{k, NotColorableCert{std::move(witness), cf.bytes, std::move(mapping)}};
}

bool verify_certificate(const Graph& g, int k, const Certificate& cert,
                        const Family& family_k1) {
    if (cert.k != k || family_k1.k != k + 1) return false;
    if (cert.colorable()) {
        const Coloring& c = std::get<ColorableCert>(cert.body).coloring;
        return is_proper(g, c) && color_count(c) <= k;
    }
    const auto& nc = std::get<NotColorableCert>(cert.body);
    auto it = family_k1.members.find(nc.member_g6);
    if (it == family_k1.members.end()) return false;
    const Graph& member = it->second.graph;
    int m = member.size();
    if (static_cast<int>(nc.mapping.size()) != m ||
        static_cast<int>(nc.witness.size()) != m)
        return false;
    std::vector<bool> seen(g.size(), false);
    for (int v : nc.mapping) {
        if (v < 0 || v >= g.size() || seen[v]) return false;
        seen[v] = true;
    }
    VertexSet image = nc.mapping;
    VertexSet witness_sorted = nc.witness;
    std::sort(image.begin(), image.end());
    std::sort(witness_sorted.begin(), witness_sorted.end());
    if (image != witness_sorted) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (member.adjacent(i, j) != g.adjacent(nc.mapping[i], nc.mapping[j]))
                return false;
    return true;
}

Graph random_free_graph(std::uint64_t seed, int size_budget) {
    if (size_budget < 1)
        throw std::invalid_argument("random_free_graph: budget must be positive");
    std::mt19937_64 rng(seed);
    Graph g = complete_graph(1);

    auto ingredient = [&](int room) {
        std::vector<Graph> fits;
        if (room >= 1) fits.push_back(complete_graph(1));
        if (room >= 2) fits.push_back(complete_graph(2));
        if (room >= 3) fits.push_back(complete_graph(3));
        if (room >= 5) fits.push_back(cycle_graph(5));
        return fits[rng() % fits.size()];
    };

    int steps = 3 + static_cast<int>(rng() % (2 * static_cast<unsigned>(size_budget)));
    for (int s = 0; s < steps; ++s) {
        int room = size_budget - g.size();
        switch (rng() % 4) {
            case 0:
                if (room >= 1) g = join(g, ingredient(room));
                break;
            case 1:
                if (room >= 1) g = join(ingredient(room), g);
                break;
            case 2:
                g = substitute(g, {static_cast<int>(rng() % g.size())},
                               ingredient(room + 1));
                break;
            default:
                g = complement(g);
                break;
        }
    }
    if (!is_p5_p5bar_free(g).free)
        throw std::logic_error("random_free_graph: closure produced a non-free graph");
    return g;
}

namespace {

void emit_ints(std::ostringstream& out, const char* tag, const std::vector<int>& xs) {
    out << tag;
    for (int x : xs) out << ' ' << x;
    out << '\n';
}

}  // namespace

std::string emit_certificate(const Graph& g, const Certificate& cert) {
    std::ostringstream out;
    out << "certificate\n";
    out << "graph " << emit_graph6(g) << '\n';
    out << "k " << cert.k << '\n';
    if (cert.colorable()) {
        out << "verdict colorable\n";
        emit_ints(out, "colors", std::get<ColorableCert>(cert.body).coloring);
    } else {
        const auto& nc = std::get<NotColorableCert>(cert.body);
        out << "verdict not-colorable\n";
        emit_ints(out, "witness", nc.witness);
        out << "member " << nc.member_g6 << '\n';
        emit_ints(out, "mapping", nc.mapping);
    }
    out << "end\n";
    return out.str();
}

namespace {

std::vector<int> parse_ints(std::istringstream& line) {
    std::vector<int> out;
    int x;
    while (line >> x) out.push_back(x);
    return out;
}

}  // namespace

ParsedCertificate parse_certificate(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [](const std::string& why) -> ParsedCertificate {
        throw std::invalid_argument("parse_certificate: " + why);
    };

    if (!std::getline(in, line) || line != "certificate") return fail("missing header");

    ParsedCertificate out;
    bool have_graph = false, have_k = false, have_verdict = false, colorable = false;
    Coloring colors;
    NotColorableCert nc;
    while (std::getline(in, line)) {
        if (line == "end") {
            if (!have_graph || !have_k || !have_verdict) return fail("incomplete block");
            if (colorable)
                out.cert.body = ColorableCert{std::move(colors)};
            else
                out.cert.body = std::move(nc);
            return out;
        }
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        if (word == "graph") {
            std::string g6;
            fields >> g6;
            out.graph = parse_graph6(g6);
            have_graph = true;
        } else if (word == "k") {
            fields >> out.cert.k;
            have_k = true;
        } else if (word == "verdict") {
            std::string v;
            fields >> v;
            if (v != "colorable" && v != "not-colorable") return fail("unknown verdict");
            colorable = v == "colorable";
            have_verdict = true;
        } else if (word == "colors") {
            colors = parse_ints(fields);
        } else if (word == "witness") {
            nc.witness = parse_ints(fields);
        } else if (word == "member") {
            fields >> nc.member_g6;
        } else if (word == "mapping") {
            nc.mapping = parse_ints(fields);
        } else if (!word.empty()) {
            return fail("unknown field '" + word + "'");
        }
    }
    return fail("missing end marker");
}

}  // namespace critg
