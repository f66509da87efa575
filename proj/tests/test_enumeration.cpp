#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "critg/canonical.hpp"
#include "critg/enumeration.hpp"
#include "critg/graph6.hpp"
#include "oracles.hpp"

using namespace critg;

namespace {

std::set<Pattern> dihedral_classes(const std::vector<Pattern>& list) {
    std::set<Pattern> out;
    for (const Pattern& p : list) out.insert(dihedral_min(p));
    return out;
}

}  // namespace

TEST_CASE("pattern enumeration") {
    CHECK_THROWS_AS(enumerate_patterns(2), std::invalid_argument);

    CHECK(enumerate_patterns(3) == std::vector<Pattern>{{1, 1, 1, 1, 1}});

    auto p4 = enumerate_patterns(4);
    CHECK(p4.size() == 1);
    CHECK(dihedral_classes(p4) == dihedral_classes({{1, 2, 1, 2, 1}}));

    auto p5 = enumerate_patterns(5);
    CHECK(p5.size() == 3);
    CHECK(dihedral_classes(p5) ==
          dihedral_classes({{2, 2, 2, 2, 1}, {2, 1, 3, 1, 2}, {1, 3, 1, 3, 1}}));

    auto p6 = enumerate_patterns(6);
    CHECK(p6.size() == 5);
    CHECK(dihedral_classes(p6) ==
          dihedral_classes({{2, 2, 2, 2, 3},
                            {2, 3, 2, 3, 1},
                            {2, 3, 1, 3, 2},
                            {1, 4, 1, 3, 2},
                            {1, 4, 1, 4, 1}}));

    // every pattern satisfies the constraints and is its orbit's minimum
    for (int k = 3; k <= 8; ++k)
        for (const Pattern& p : enumerate_patterns(k)) {
            int sum = 0;
            for (int i = 0; i < 5; ++i) {
                sum += p[i];
                CHECK(p[i] >= 1);
                CHECK(p[i] + p[(i + 1) % 5] <= k - 1);
            }
            CHECK(sum == 2 * k - 1);
            CHECK(dihedral_min(p) == p);
        }
}

TEST_CASE("base families") {
    auto base = base_families();
    CHECK(base.at(1).f() == 1);
    CHECK(base.at(2).f() == 1);
    CHECK(base.at(3).f() == 2);
    CHECK(base.at(1).b() == 0);
    CHECK(base.at(2).b() == 0);
    CHECK(base.at(3).b() == 1);
    CHECK(base.at(1).contains(emit_graph6(canonical_graph(complete_graph(1)))));
    CHECK(base.at(2).contains(emit_graph6(canonical_graph(complete_graph(2)))));
    CHECK(base.at(3).contains(emit_graph6(canonical_graph(complete_graph(3)))));
    CHECK(base.at(3).contains(emit_graph6(canonical_graph(cycle_graph(5)))));
    // the C5 is the buoy-built member of C3
    CHECK(base.at(3).members.at(emit_graph6(canonical_graph(cycle_graph(5)))).origin ==
          Origin::buoy);
}

TEST_CASE("families through k = 5 with full verification") {
    EnumerateOptions opts;
    opts.verify_depth = 5;
    auto families = enumerate_families(5, opts);

    CHECK(families.at(4).f() == 3);
    CHECK(families.at(4).b() == 1);
    CHECK(families.at(4).j() == 2);
    CHECK(families.at(5).f() == 9);
    CHECK(families.at(5).b() == 6);
    CHECK(families.at(5).j() == 3);

    // C4 equals the three hand-built graphs
    Graph t1 = complete_graph(4);
    Graph t2 = join(complete_graph(1), cycle_graph(5));
    Graph t3 = assemble_buoy({complete_graph(1), complete_graph(2), complete_graph(1),
                              complete_graph(2), complete_graph(1)});
    std::set<std::string> expected{emit_graph6(canonical_graph(t1)),
                                   emit_graph6(canonical_graph(t2)),
                                   emit_graph6(canonical_graph(t3))};
    std::set<std::string> got;
    for (const auto& [key, m] : families.at(4).members) got.insert(key);
    CHECK(got == expected);

    // joins of K1 with each member of C4 all appear in C5
    for (const Graph* g : {&t1, &t2, &t3}) {
        std::string key = emit_graph6(canonical_graph(join(complete_graph(1), *g)));
        CHECK(families.at(5).contains(key));
        CHECK(families.at(5).members.at(key).origin == Origin::join);
    }

    CHECK(cross_check_naive_joins(4, families));
    CHECK(cross_check_naive_joins(5, families));
}

TEST_CASE("k = 6 census, splits and per-pattern counts") {
    EnumerateOptions opts;
    opts.verify_depth = 0;  // counting only; criticality is covered elsewhere
    auto families = enumerate_families(6, opts);

    const Family& c6 = families.at(6);
    CHECK(c6.f() == 31);
    CHECK(c6.b() == 21);
    CHECK(c6.j() == 10);

    std::map<Pattern, int> expect{{dihedral_min({2, 2, 2, 2, 3}), 2},
                                  {dihedral_min({2, 3, 2, 3, 1}), 4},
                                  {dihedral_min({2, 3, 1, 3, 2}), 3},
                                  {dihedral_min({1, 4, 1, 3, 2}), 6},
                                  {dihedral_min({1, 4, 1, 4, 1}), 6}};
    CHECK(c6.pattern_counts == expect);

    CHECK(cross_check_naive_joins(6, families));

    // every member is free; dedup means pairwise non-isomorphic by construction
    for (const auto& [key, m] : c6.members) {
        CHECK(parse_graph6(key) == m.graph);
        CHECK(is_p5_p5bar_free(m.graph).free);
    }
}

namespace {

// Independent per-pattern count oracle: Burnside over the pattern's dihedral
// stabilizer acting on bag-choice tuples.  Valid as long as inequivalent
// tuples give non-isomorphic buoys, which is exactly what it cross-checks.
long burnside_pattern_count(const Pattern& p, const std::map<int, Family>& families) {
    long total = 0;
    int stabilizer = 0;
    for (int flip = 0; flip < 2; ++flip)
        for (int rot = 0; rot < 5; ++rot) {
            std::array<int, 5> sigma;
            for (int i = 0; i < 5; ++i) sigma[i] = ((flip ? 5 - i : i) + rot) % 5;
            bool fixes = true;
            for (int i = 0; i < 5; ++i)
                if (p[sigma[i]] != p[i]) fixes = false;
            if (!fixes) continue;
            ++stabilizer;
            long fixed = 1;
            std::array<bool, 5> seen{};
            for (int i = 0; i < 5; ++i) {
                if (seen[i]) continue;
                for (int j = i; !seen[j]; j = sigma[j]) seen[j] = true;
                fixed *= families.at(p[i]).f();
            }
            total += fixed;
        }
    return total / stabilizer;
}

}  // namespace

TEST_CASE("per-pattern counts match the Burnside orbit oracle up to k = 8") {
    EnumerateOptions opts;
    opts.verify_depth = 0;
    opts.cross_check = false;
    auto families = enumerate_families(8, opts);
    for (int k = 4; k <= 8; ++k)
        for (const auto& [p, count] : families.at(k).pattern_counts)
            CHECK(count == burnside_pattern_count(p, families));
}

TEST_CASE("census through k = 8") {
    // counts independently verified: every member passes the exact
    // criticality and freeness oracles and members are pairwise
    // non-isomorphic; the k=7 and k=8 values exceed previously reported
    // ones (see README)
    EnumerateOptions opts;
    opts.verify_depth = 0;
    auto families = enumerate_families(8, opts);
    CHECK(families.at(7).f() == 186);
    CHECK(families.at(7).b() == 154);
    CHECK(families.at(7).j() == 32);
    CHECK(families.at(8).f() == 1585);
    CHECK(families.at(8).b() == 1392);
    CHECK(families.at(8).j() == 193);
    CHECK(enumerate_patterns(7).size() == 10);
    CHECK(enumerate_patterns(8).size() == 16);

    // the join of the B4 buoy with the C5 is the first member the join
    // decomposition owes to a two-buoy term
    Graph t3 = assemble_buoy({complete_graph(1), complete_graph(2), complete_graph(1),
                              complete_graph(2), complete_graph(1)});
    std::string key = emit_graph6(canonical_graph(join(t3, cycle_graph(5))));
    REQUIRE(families.at(7).contains(key));
    CHECK(families.at(7).members.at(key).origin == Origin::join);
}

TEST_CASE("enumeration is deterministic and the cache round-trips") {
    std::string dir = (std::filesystem::temp_directory_path() / "critg_test_cache").string();
    std::filesystem::remove_all(dir);

    EnumerateOptions opts;
    opts.verify_depth = 4;
    opts.cache_dir = dir;
    auto first = enumerate_families(4, opts);

    std::map<int, std::string> bytes;
    for (int k = 1; k <= 4; ++k) {
        std::ifstream in(dir + "/C" + std::to_string(k) + ".g6");
        std::string all((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
        bytes[k] = all;
        CHECK(!all.empty());
    }

    // a second run loads the cache and leaves files byte-identical
    auto second = enumerate_families(4, opts);
    for (int k = 1; k <= 4; ++k) {
        std::ifstream in(dir + "/C" + std::to_string(k) + ".g6");
        std::string all((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
        CHECK(all == bytes[k]);
        CHECK(first.at(k).f() == second.at(k).f());
        CHECK(first.at(k).b() == second.at(k).b());
    }

    Family loaded = load_family(4, dir);
    CHECK(loaded.f() == 3);
    CHECK(loaded.b() == 1);
    CHECK(loaded.j() == 2);
    CHECK(loaded.verify_depth >= 4);

    // an injected mutant line fails verification on the next load
    {
        std::ofstream out(dir + "/C3.g6", std::ios::app);
        GraphBuilder b(5);
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        b.add_edge(2, 3);
        b.add_edge(3, 4);
        b.add_edge(4, 0);
        b.add_edge(0, 2);  // chord
        out << emit_graph6(b.build()) << "\n";
    }
    // force re-verification by asking for a deeper policy than the sidecar
    {
        std::ifstream meta_in(dir + "/C3.json");
        std::string meta((std::istreambuf_iterator<char>(meta_in)),
                         std::istreambuf_iterator<char>());
        meta_in.close();
        auto pos = meta.find("\"verify_depth\"");
        REQUIRE(pos != std::string::npos);
        std::ofstream meta_out(dir + "/C3.json", std::ios::trunc);
        meta_out << meta.substr(0, pos) << "\"verify_depth\": -1,"
                 << meta.substr(meta.find('\n', pos) + 1);
    }
    CHECK_THROWS_AS(enumerate_families(3, opts), VerificationError);

    std::filesystem::remove_all(dir);
}
