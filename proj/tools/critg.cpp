// critg: enumerate k-critical (P5,co-P5)-free graphs, certify k-colorability,
// and verify the structural invariants of the enumerated families.
//
// Exit codes: 0 success, 1 verification/certificate failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critg/canonical.hpp"
#include "critg/certify.hpp"
#include "critg/enumeration.hpp"
#include "critg/graph6.hpp"
#include "critg/lemma_suite.hpp"
#include "critg/recognition.hpp"

using namespace critg;
using nlohmann::json;

namespace {

std::string pattern_str(const Pattern& p) {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < 5; ++i) out << p[i] << (i < 4 ? "," : ")");
    return out.str();
}

json family_json(const Family& fam) {
    json entry;
    entry["k"] = fam.k;
    entry["f"] = fam.f();
    entry["b"] = fam.b();
    entry["j"] = fam.j();
    entry["patterns"] = json::array();
    for (const Pattern& p : fam.patterns) {
        json pe;
        pe["pattern"] = p;
        auto it = fam.pattern_counts.find(p);
        pe["members"] = it == fam.pattern_counts.end() ? 0 : it->second;
        entry["patterns"].push_back(pe);
    }
    entry["verify_depth"] = fam.verify_depth;
    entry["runtime_seconds"] = fam.runtime_seconds;
    return entry;
}

int cmd_enumerate(int k, const std::string& cache_dir, int verify_depth,
                  std::uint64_t seed, const std::string& format) {
    EnumerateOptions opts;
    opts.verify_depth = verify_depth;
    opts.seed = seed;
    opts.cache_dir = cache_dir;
    std::map<int, Family> families;
    try {
        families = enumerate_families(k, opts);
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        json out;
        out["families"] = json::array();
        for (const auto& [level, fam] : families) out["families"].push_back(family_json(fam));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "  k        f        b        j  patterns (members)\n";
    for (const auto& [level, fam] : families) {
        std::ostringstream pats;
        if (fam.patterns.empty())
            pats << "-";
        else
            for (const Pattern& p : fam.patterns) {
                auto it = fam.pattern_counts.find(p);
                pats << pattern_str(p) << ':'
                     << (it == fam.pattern_counts.end() ? 0 : it->second) << ' ';
            }
        std::printf("%3d %8d %8d %8d  %s\n", level, fam.f(), fam.b(), fam.j(),
                    pats.str().c_str());
    }
    return 0;
}

int cmd_certify(int k, const std::string& input, const std::string& cache_dir,
                bool no_build, int verify_depth, std::uint64_t seed,
                const std::string& format) {
    std::map<int, Family> families;
    EnumerateOptions opts;
    opts.verify_depth = verify_depth;
    opts.seed = seed;
    opts.cache_dir = cache_dir;
    if (no_build && !cache_dir.empty() && !family_cached(k + 1, cache_dir)) {
        std::cerr << "certify: family C" << k + 1 << " is not cached and --no-build is set\n";
        return 2;
    }
    try {
        families = enumerate_families(k + 1, opts);
    } catch (const VerificationError& e) {
        std::cerr << "verification failure while building families: " << e.what() << "\n";
        return 1;
    }
    const Family& next = families.at(k + 1);

    std::istream* in = &std::cin;
    std::ifstream file;
    if (input != "-") {
        file.open(input);
        if (!file) {
            std::cerr << "certify: cannot open " << input << "\n";
            return 2;
        }
        in = &file;
    }

    int exit_code = 0;
    json json_out = json::array();
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            if (format == "json") {
                json entry;
                entry["line"] = lineno;
                entry["verdict"] = "parse-error";
                entry["error"] = e.what();
                json_out.push_back(entry);
            } else {
                std::cout << "certificate\ngraph " << line << "\nk " << k
                          << "\nverdict parse-error\nerror " << e.what() << "\nend\n\n";
            }
            exit_code = std::max(exit_code, 2);
            continue;
        }
        try {
            Certificate cert = certify_colorability(g, k, next);
            if (!verify_certificate(g, k, cert, next)) {
                std::cerr << "certificate failed self-verification on line " << lineno
                          << "\n";
                return 1;
            }
            if (format == "json") {
                json entry;
                entry["line"] = lineno;
                entry["graph"] = emit_graph6(g);
                entry["k"] = k;
                if (cert.colorable()) {
                    entry["verdict"] = "colorable";
                    entry["colors"] = std::get<ColorableCert>(cert.body).coloring;
                } else {
                    const auto& nc = std::get<NotColorableCert>(cert.body);
                    entry["verdict"] = "not-colorable";
                    entry["witness"] = nc.witness;
                    entry["member"] = nc.member_g6;
                    entry["mapping"] = nc.mapping;
                }
                json_out.push_back(entry);
            } else {
                std::cout << emit_certificate(g, cert) << "\n";
            }
        } catch (const NotFreeError& e) {
            const auto& w = e.witness;
            if (format == "json") {
                json entry;
                entry["line"] = lineno;
                entry["graph"] = emit_graph6(g);
                entry["k"] = k;
                entry["verdict"] = "not-in-class";
                entry["forbidden"] = w.in_complement ? "p5-complement" : "p5";
                entry["witness"] = std::vector<int>(w.vertices.begin(), w.vertices.end());
                json_out.push_back(entry);
            } else {
                std::cout << "certificate\ngraph " << emit_graph6(g) << "\nk " << k
                          << "\nverdict not-in-class\nforbidden "
                          << (w.in_complement ? "p5-complement" : "p5");
                for (int v : w.vertices) std::cout << ' ' << v;
                std::cout << "\nend\n\n";
            }
            exit_code = std::max(exit_code, 2);
        } catch (const FamilyMissError& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
    }
    if (format == "json") std::cout << json_out.dump(2) << "\n";
    return exit_code;
}

int cmd_verify_lemmas(int k, const std::string& cache_dir, bool no_build,
                      int verify_depth, std::uint64_t seed, const std::string& format) {
    EnumerateOptions opts;
    opts.verify_depth = verify_depth;
    opts.seed = seed;
    opts.cache_dir = cache_dir;
    if (no_build && !cache_dir.empty()) {
        for (int level = 1; level <= k; ++level)
            if (!family_cached(level, cache_dir)) {
                std::cerr << "verify-lemmas: family C" << level
                          << " is not cached and --no-build is set\n";
                return 2;
            }
    }
    std::map<int, Family> families;
    try {
        families = enumerate_families(k, opts);
    } catch (const VerificationError& e) {
        std::cerr << "verification failure while building families: " << e.what() << "\n";
        return 1;
    }
    SuiteReport report = run_lemma_suite(families, k);
    if (format == "json") {
        json rows = json::array();
        for (const SuiteRow& r : report.rows) {
            json entry;
            entry["check"] = r.check;
            entry["k"] = r.k;
            entry["checked"] = r.checked;
            entry["failures"] = r.failures;
            entry["failing"] = r.failing;
            rows.push_back(entry);
        }
        json out;
        out["rows"] = rows;
        out["ok"] = report.ok();
        std::cout << out.dump(2) << "\n";
    } else {
        for (const SuiteRow& r : report.rows) {
            std::printf("k=%d %-26s %s (%d checked)", r.k, r.check.c_str(),
                        r.failures == 0 ? "pass" : "FAIL", r.checked);
            if (r.failures > 0) {
                std::printf("  %d failing:", r.failures);
                for (const std::string& g6 : r.failing) std::printf(" %s", g6.c_str());
            }
            std::printf("\n");
        }
        std::printf("verify-lemmas: %s\n", report.ok() ? "all checks passed" : "FAILURES");
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-critical (P5,co-P5)-free graphs: enumeration, certification, verification"};
    app.require_subcommand(1);

    int k = 0;
    std::string cache_dir;
    int verify_depth = 6;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string input;
    bool no_build = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        cmd->add_option("--k", k, "family level")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--cache-dir", cache_dir, "family cache directory");
        cmd->add_option("--verify-depth", verify_depth,
                        "full criticality verification up to this level");
        cmd->add_option("--seed", seed, "seed for sampled verification");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_input)
            cmd->add_option("--input", input, "graph6 input file, '-' for stdin")
                ->required();
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "build and report C_1..C_k");
    add_common(enumerate, false);

    CLI::App* certify = app.add_subcommand("certify", "certify k-colorability per input line");
    add_common(certify, true);
    certify->add_flag("--no-build", no_build, "fail instead of building missing families");

    CLI::App* lemmas = app.add_subcommand("verify-lemmas",
                                          "run the structural invariant suite over C_1..C_k");
    add_common(lemmas, false);
    lemmas->add_flag("--no-build", no_build, "fail instead of building missing families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(k, cache_dir, verify_depth, seed, format);
        if (app.got_subcommand(certify))
            return cmd_certify(k, input, cache_dir, no_build, verify_depth, seed, format);
        return cmd_verify_lemmas(k, cache_dir, no_build, verify_depth, seed, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
