#include "critg/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"

#include "critg/canonical.hpp"
#include "critg/graph6.hpp"
#include "critg/recognition.hpp"

namespace critg {

namespace {

using nlohmann::json;

void insert_canonical(std::map<std::string, Member>& out, const Graph& g, Origin origin) {
    Graph canon = canonical_graph(g);
    std::string key = emit_graph6(canon);
    out.emplace(std::move(key), Member{std::move(canon), origin});
}

}  // namespace

int Family::b() const {
    int count = 0;
    for (const auto& [key, m] : members)
        if (m.origin == Origin::buoy) ++count;
    return count;
}

int Family::j() const {
    int count = 0;
    for (const auto& [key, m] : members)
        if (m.origin == Origin::join) ++count;
    return count;
}

Graph assemble_buoy(const std::array<Graph, 5>& bags) {
    int total = 0;
    std::array<int, 5> off{};
    for (int i = 0; i < 5; ++i) {
        off[i] = total;
        total += bags[i].size();
    }
    GraphBuilder b(total);
    for (int i = 0; i < 5; ++i) {
        for (int u = 0; u < bags[i].size(); ++u)
            for (int v = u + 1; v < bags[i].size(); ++v)
                if (bags[i].adjacent(u, v)) b.add_edge(off[i] + u, off[i] + v);
        int next = (i + 1) % 5;
        for (int u = 0; u < bags[i].size(); ++u)
            for (int v = 0; v < bags[next].size(); ++v)
                b.add_edge(off[i] + u, off[next] + v);
    }
    return b.build();
}

Pattern dihedral_min(const Pattern& p) {
    Pattern best = p;
    for (int flip = 0; flip < 2; ++flip) {
        for (int rot = 0; rot < 5; ++rot) {
            Pattern cand;
            for (int i = 0; i < 5; ++i) {
                int src = (i + rot) % 5;
                cand[i] = flip ? p[(5 - src) % 5] : p[src];
            }
            best = std::min(best, cand);
        }
    }
    return best;
}

std::vector<Pattern> enumerate_patterns(int k) {
    if (k < 3) throw std::invalid_argument("enumerate_patterns: k must be at least 3");
    int total = 2 * k - 1;
    std::vector<Pattern> out;
    Pattern p;
    for (p[0] = 1; p[0] < k; ++p[0])
        for (p[1] = 1; p[1] < k; ++p[1])
            for (p[2] = 1; p[2] < k; ++p[2])
                for (p[3] = 1; p[3] < k; ++p[3]) {
                    p[4] = total - p[0] - p[1] - p[2] - p[3];
                    if (p[4] < 1) continue;
                    bool ok = true;
                    for (int i = 0; i < 5 && ok; ++i)
                        if (p[i] + p[(i + 1) % 5] > k - 1) ok = false;
                    if (!ok) continue;
                    if (dihedral_min(p) == p) out.push_back(p);
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::string, Member> build_buoys(int k, const std::map<int, Family>& lower,
                                          std::map<Pattern, int>* pattern_counts) {
    std::map<std::string, Member> out;
    if (k < 3) return out;
    for (const Pattern& pattern : enumerate_patterns(k)) {
        std::array<std::vector<const Graph*>, 5> choices;
        for (int i = 0; i < 5; ++i) {
            const Family& fam = lower.at(pattern[i]);
            for (const auto& [key, m] : fam.members) choices[i].push_back(&m.graph);
        }
        std::map<std::string, Member> per_pattern;
        std::array<std::size_t, 5> idx{};
        for (;;) {
            Graph buoy = assemble_buoy({*choices[0][idx[0]], *choices[1][idx[1]],
                                        *choices[2][idx[2]], *choices[3][idx[3]],
                                        *choices[4][idx[4]]});
            insert_canonical(per_pattern, buoy, Origin::buoy);
            int pos = 4;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
        if (pattern_counts)
            (*pattern_counts)[pattern] = static_cast<int>(per_pattern.size());
        for (auto& [key, m] : per_pattern) out.emplace(key, std::move(m));
    }
    return out;
}

namespace {

void partitions_into_buoy_parts(int remaining, int max_part, std::vector<int>& parts,
                                std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        if (parts.size() >= 2) out.push_back(parts);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 3; --part) {
        parts.push_back(part);
        partitions_into_buoy_parts(remaining - part, part, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::map<std::string, Member> build_joins(int k, const std::map<int, Family>& lower) {
    std::map<std::string, Member> out;
    if (k < 2) return out;

    const Graph k1 = complete_graph(1);
    for (const auto& [key, m] : lower.at(k - 1).members)
        insert_canonical(out, join(k1, m.graph), Origin::join);

    std::vector<std::vector<int>> splits;
    std::vector<int> parts;
    partitions_into_buoy_parts(k, k - 3, parts, splits);
    for (const auto& split : splits) {
        std::vector<std::vector<const Graph*>> choices;
        bool feasible = true;
        for (int part : split) {
            choices.emplace_back();
            for (const auto& [key, m] : lower.at(part).members)
                if (m.origin == Origin::buoy) choices.back().push_back(&m.graph);
            if (choices.back().empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<std::size_t> idx(split.size(), 0);
        for (;;) {
            Graph g = *choices[0][idx[0]];
            for (std::size_t i = 1; i < choices.size(); ++i)
                g = join(g, *choices[i][idx[i]]);
            insert_canonical(out, g, Origin::join);
            int pos = static_cast<int>(split.size()) - 1;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

std::map<int, Family> base_families() {
    std::map<int, Family> out;

    Family c1;
    c1.k = 1;
    insert_canonical(c1.members, complete_graph(1), Origin::base);
    out[1] = std::move(c1);

    Family c2;
    c2.k = 2;
    c2.members = build_joins(2, out);
    out[2] = std::move(c2);

    Family c3;
    c3.k = 3;
    c3.patterns = enumerate_patterns(3);
    c3.members = build_joins(3, out);
    for (auto& [key, m] : build_buoys(3, out, &c3.pattern_counts))
        c3.members.emplace(key, std::move(m));
    out[3] = std::move(c3);

    return out;
}

bool cross_check_naive_joins(int k, const std::map<int, Family>& families) {
    std::map<std::string, Member> naive;
    for (int k1 = 1; k1 <= k / 2; ++k1) {
        int k2 = k - k1;
        for (const auto& [ka, ma] : families.at(k1).members)
            for (const auto& [kb, mb] : families.at(k2).members)
                insert_canonical(naive, join(ma.graph, mb.graph), Origin::join);
    }
    std::vector<std::string> from_eq;
    for (const auto& [key, m] : families.at(k).members)
        if (m.origin == Origin::join) from_eq.push_back(key);
    std::vector<std::string> from_naive;
    for (const auto& [key, m] : naive) from_naive.push_back(key);
    return from_eq == from_naive;
}

namespace {

void verify_family(Family& fam, const EnumerateOptions& opts) {
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + fam.k);
    std::bernoulli_distribution pick(opts.sample_rate);
    for (const auto& [key, m] : fam.members) {
        FreenessCheck fc = is_p5_p5bar_free(m.graph);
        if (!fc.free)
            throw VerificationError("family member is not (P5,co-P5)-free", key);
        bool check_critical = fam.k <= opts.verify_depth || pick(rng);
        if (check_critical && !is_k_critical(m.graph, fam.k))
            throw VerificationError(
                "family member is not " + std::to_string(fam.k) + "-critical", key);
    }
    fam.verify_depth = opts.verify_depth;
}

Family build_level(int k, const std::map<int, Family>& lower) {
    Family fam;
    fam.k = k;
    if (k == 1) {
        insert_canonical(fam.members, complete_graph(1), Origin::base);
        return fam;
    }
    fam.members = build_joins(k, lower);
    if (k >= 3) {
        fam.patterns = enumerate_patterns(k);
        for (auto& [key, m] : build_buoys(k, lower, &fam.pattern_counts)) {
            // joins have disconnected complements, buoys connected ones, so
            // the two construction routes can never produce the same graph
            if (!fam.members.emplace(key, std::move(m)).second)
                throw VerificationError("graph arose as both a join and a buoy", key);
        }
    }
    return fam;
}

std::string g6_path(int k, const std::string& dir) {
    return dir + "/C" + std::to_string(k) + ".g6";
}
std::string json_path(int k, const std::string& dir) {
    return dir + "/C" + std::to_string(k) + ".json";
}

}  // namespace

std::map<int, Family> enumerate_families(int k, const EnumerateOptions& opts) {
    if (k < 1) throw std::invalid_argument("enumerate_families: k must be positive");
    std::map<int, Family> families;
    for (int level = 1; level <= k; ++level) {
        Family fam;
        bool dirty = false;
        if (!opts.cache_dir.empty() && family_cached(level, opts.cache_dir)) {
            fam = load_family(level, opts.cache_dir);
            if (fam.verify_depth < std::min(level, opts.verify_depth)) {
                // cache was verified under a weaker policy; redo it now
                auto start = std::chrono::steady_clock::now();
                verify_family(fam, opts);
                fam.runtime_seconds +=
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
                dirty = true;
            }
        } else {
            auto start = std::chrono::steady_clock::now();
            fam = build_level(level, families);
            verify_family(fam, opts);
            if (opts.cross_check && level >= 2) {
                families[level] = fam;
                if (!cross_check_naive_joins(level, families))
                    throw VerificationError(
                        "join decomposition disagrees with the naive enumeration at k=" +
                            std::to_string(level),
                        "");
                families.erase(level);
            }
            fam.runtime_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
            dirty = true;
        }
        if (!opts.cache_dir.empty() && dirty) save_family(fam, opts.cache_dir);
        families[level] = std::move(fam);
    }
    return families;
}

bool family_cached(int k, const std::string& dir) {
    return std::filesystem::exists(g6_path(k, dir)) &&
           std::filesystem::exists(json_path(k, dir));
}

void save_family(const Family& family, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(g6_path(family.k, dir), std::ios::trunc);
        for (const auto& [key, m] : family.members) out << key << "\n";
    }
    json meta;
    meta["k"] = family.k;
    meta["f"] = family.f();
    meta["b"] = family.b();
    meta["j"] = family.j();
    meta["patterns"] = json::array();
    for (const Pattern& p : family.patterns) {
        json entry;
        entry["pattern"] = p;
        auto it = family.pattern_counts.find(p);
        entry["members"] = it == family.pattern_counts.end() ? 0 : it->second;
        meta["patterns"].push_back(entry);
    }
    meta["verify_depth"] = family.verify_depth;
    meta["runtime_seconds"] = family.runtime_seconds;
    std::ofstream out(json_path(family.k, dir), std::ios::trunc);
    out << meta.dump(2) << "\n";
}

Family load_family(int k, const std::string& dir) {
    Family fam;
    fam.k = k;
    std::ifstream in(g6_path(k, dir));
    if (!in) throw std::runtime_error("load_family: missing " + g6_path(k, dir));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        Origin origin = Origin::join;
        if (k == 1)
            origin = Origin::base;
        else if (is_connected(complement(g)))
            origin = Origin::buoy;  // joins have disconnected complements
        insert_canonical(fam.members, g, origin);
    }
    std::ifstream meta_in(json_path(k, dir));
    if (meta_in) {
        json meta = json::parse(meta_in, nullptr, false);
        if (!meta.is_discarded()) {
            fam.verify_depth = meta.value("verify_depth", -1);
            fam.runtime_seconds = meta.value("runtime_seconds", 0.0);
            if (meta.contains("patterns"))
                for (const auto& entry : meta["patterns"]) {
                    Pattern p{};
                    for (int i = 0; i < 5; ++i) p[i] = entry["pattern"][i].get<int>();
                    fam.patterns.push_back(p);
                    fam.pattern_counts[p] = entry.value("members", 0);
                }
        }
    }
    return fam;
}

}  // namespace critg
