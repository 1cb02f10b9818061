// Command-line front end: enumeration, gyration, orbit tracing, theorem
// verification suites, and rendering of triangular fully packed loop
// configurations.
//
// Exit codes: 0 success, 1 a verification suite found a counterexample,
// 2 bad usage, 3 invalid input configuration or file.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfpl/render.hpp"
#include "tfpl/tfpl.hpp"

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

int size_cap() {
    if (const char* env = std::getenv("TFPL_MAX_SIZE")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid TFPL_MAX_SIZE\n";
    }
    return tfpl::kDefaultSizeCap;
}

tfpl::TfplConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tfpl::SerializationError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    tfpl::TfplConfig cfg = tfpl::TfplConfig::deserialize(buffer.str());
    auto result = cfg.validate();
    if (!result.ok)
        throw tfpl::SerializationError(path + ": invalid configuration (" +
                                       result.rule + ": " + result.detail + ")");
    return cfg;
}

struct SuiteResult {
    std::vector<std::string> lines;
    long long checks = 0;
    long long failures = 0;

    void record(const std::string& label, bool ok, const std::string& extra = "") {
        ++checks;
        failures += !ok;
        lines.push_back(label + " " + (ok ? "PASS" : "FAIL") +
                        (extra.empty() ? "" : " " + extra));
    }
};

std::map<tfpl::BoundaryTriple, std::vector<tfpl::TfplConfig>> configs_by_boundary(
    int n, int cap) {
    std::map<tfpl::BoundaryTriple, std::vector<tfpl::TfplConfig>> groups;
    tfpl::for_each_tfpl(
        n,
        [&](tfpl::TfplConfig&& cfg) {
            groups[cfg.boundary()].push_back(std::move(cfg));
            return true;
        },
        std::nullopt, cap);
    return groups;
}

SuiteResult suite_inverse(int n, int cap) {
    SuiteResult res;
    for (const auto& [b, configs] : configs_by_boundary(n, cap)) {
        bool ok = true;
        for (const tfpl::TfplConfig& f : configs) {
            for (const tfpl::BinaryWord& um : tfpl::horizontal_strip_predecessors(b.u))
                ok = ok && tfpl::wieland_right(tfpl::wieland_left(f, um), b.v) == f;
            for (const tfpl::BinaryWord& vm : tfpl::vertical_strip_predecessors(b.v))
                ok = ok && tfpl::wieland_left(tfpl::wieland_right(f, vm), b.u) == f;
        }
        res.record(b.key(), ok);
    }
    return res;
}

SuiteResult suite_stability(int n, int cap) {
    SuiteResult res;
    for (const auto& [b, configs] : configs_by_boundary(n, cap)) {
        bool ok = true;
        for (const tfpl::TfplConfig& f : configs) {
            bool wl_fixed = tfpl::is_stable(f);
            bool drifter_free = f.drifters().empty();
            bool wr_fixed = tfpl::wieland_right(f) == f;
            ok = ok && wl_fixed == drifter_free && wl_fixed == wr_fixed;
            auto orbit = tfpl::iterate_to_stable(f);
            ok = ok && orbit.steps <= 2 * n - 1 && orbit.stable.drifters().empty();
        }
        res.record(b.key(), ok, "configs=" + std::to_string(configs.size()));
    }
    return res;
}

SuiteResult suite_linear(int n, int cap) {
    SuiteResult res;
    tfpl::CountTable table = tfpl::count_by_boundary(n, cap);
    for (int k = 0; k <= n; ++k) {
        auto words = tfpl::words_of_type(k, n - k);
        for (const tfpl::BinaryWord& u : words)
            for (const tfpl::BinaryWord& v : words)
                for (const tfpl::BinaryWord& w : words) {
                    auto rel = tfpl::verify_linear_relation(u, v, w, table);
                    res.record(u.str() + "|" + v.str() + "|" + w.str(), rel.ok,
                               "lhs=" + std::to_string(rel.lhs) +
                                   " rhs=" + std::to_string(rel.rhs));
                }
    }
    return res;
}

SuiteResult suite_conditions(int n, int cap) {
    SuiteResult res;
    for (const auto& [b, configs] : configs_by_boundary(n, cap)) {
        bool ok = b.u.zeros() == b.v.zeros() && b.u.zeros() == b.w.zeros();
        ok = ok && tfpl::diagram_contains(tfpl::to_partition(b.w), tfpl::to_partition(b.u));
        ok = ok && tfpl::diagram_contains(tfpl::to_partition(b.w), tfpl::to_partition(b.v));
        ok = ok && tfpl::excess(b) >= 0;
        if (n <= 4)
            for (const tfpl::TfplConfig& f : configs)
                ok = ok && tfpl::verify_inequality_by_gyration(f).ok;
        res.record(b.key(), ok, "excess=" + std::to_string(tfpl::excess(b)));
    }
    return res;
}

SuiteResult suite_lr(int n, int cap) {
    SuiteResult res;
    auto report = tfpl::verify_excess_zero(n, cap);
    for (const auto& entry : report.entries)
        res.record(entry.boundary.key(), entry.ok,
                   "t=" + std::to_string(entry.count) +
                       " c=" + std::to_string(entry.lr) +
                       (entry.all_stable ? " all-stable" : " unstable-member"));
    return res;
}

SuiteResult suite_sweep(int n, int cap) {
    SuiteResult res;
    for (const auto& [b, configs] : configs_by_boundary(n, cap)) {
        bool ok = true;
        for (const tfpl::TfplConfig& f : configs) {
            auto drifters = f.drifters();
            if (drifters.empty()) continue;
            int leftmost = drifters.front().c;
            for (const tfpl::EdgeSlot& e : drifters) leftmost = std::min(leftmost, e.c);
            for (const tfpl::EdgeSlot& e : tfpl::wieland_left(f).drifters())
                ok = ok && e.c > leftmost;
        }
        res.record(b.key(), ok);
    }
    return res;
}

SuiteResult suite_fpl_rotation(int n, int cap) {
    SuiteResult res;
    auto report = tfpl::verify_rotation_invariance(n, cap);
    for (const auto& [pattern, count] : report.counts) {
        bool ok = report.counts.count(pattern.rotated(1)) &&
                  report.counts.at(pattern.rotated(1)) == count &&
                  report.counts.count(pattern.rotated(-1)) &&
                  report.counts.at(pattern.rotated(-1)) == count;
        res.record(pattern.to_string(), ok, "count=" + std::to_string(count));
    }
    res.lines.push_back("sweep-rotation odd=" + std::to_string(report.odd_rotation) +
                        " even=" + std::to_string(report.even_rotation));
    if (!report.ok) ++res.failures;
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular fully packed loops: gyration, enumeration and verification"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List or count configurations");
    int enum_size = 0;
    std::string enum_boundary, enum_out;
    bool count_only = false;
    enumerate->add_option("--size", enum_size, "Configuration size")->required();
    enumerate->add_option("--boundary", enum_boundary,
                          "Restrict to one boundary, written u,v,w");
    enumerate->add_flag("--count-only", count_only, "Print only the number found");
    enumerate->add_option("--out", enum_out, "Write configurations to this file");

    // gyrate
    auto* gyrate = app.add_subcommand("gyrate", "Apply one gyration");
    std::string gy_in, gy_side, gy_word;
    gyrate->add_option("--in", gy_in, "Configuration file")->required();
    gyrate->add_option("--side", gy_side, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    gyrate->add_option("--word", gy_word,
                       "Strip predecessor of the matching boundary word "
                       "(defaults to the boundary word itself)");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "Iterate left gyration to the stable configuration");
    std::string orbit_in;
    orbit->add_option("--in", orbit_in, "Configuration file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    int verify_size = 0;
    std::string suite;
    verify->add_option("--size", verify_size, "Size to verify")->required();
    verify->add_option("--suite", suite, "Which suite to run")
        ->required()
        ->check(CLI::IsMember({"inverse", "stability", "linear", "conditions", "lr",
                               "sweep", "fpl-rotation"}));

    // render
    auto* render = app.add_subcommand("render", "Draw a configuration");
    std::string render_in, render_format;
    bool render_parity = false;
    render->add_option("--in", render_in, "Configuration file")->required();
    render->add_option("--format", render_format, "ascii or svg")
        ->required()
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--parity", render_parity, "Mark odd/even cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const int cap = size_cap();

    try {
        if (*enumerate) {
            if (enum_size < 1 || enum_size > cap) {
                std::cerr << "error: size " << enum_size << " outside 1.." << cap
                          << " (set TFPL_MAX_SIZE to raise the cap)\n";
                return kExitUsage;
            }
            std::optional<tfpl::BoundaryTriple> filter;
            if (!enum_boundary.empty()) {
                try {
                    filter = tfpl::BoundaryTriple::parse(enum_boundary);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "error: --boundary: " << e.what() << "\n";
                    return kExitUsage;
                }
                if (filter->u.size() != enum_size) {
                    std::cerr << "error: --boundary words must have length " << enum_size
                              << "\n";
                    return kExitUsage;
                }
            }
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!enum_out.empty()) {
                file.open(enum_out);
                if (!file) {
                    std::cerr << "error: cannot write " << enum_out << "\n";
                    return kExitBadInput;
                }
                out = &file;
            }
            long long count = 0;
            tfpl::for_each_tfpl(
                enum_size,
                [&](tfpl::TfplConfig&& cfg) {
                    ++count;
                    if (!count_only) *out << cfg.serialize() << "\n";
                    return true;
                },
                filter, cap);
            if (count_only) std::cout << count << "\n";
            return 0;
        }

        if (*gyrate) {
            tfpl::TfplConfig cfg = load_config(gy_in);
            tfpl::BoundaryTriple b = cfg.boundary();
            std::optional<tfpl::BinaryWord> word;
            if (!gy_word.empty()) {
                try {
                    word = tfpl::BinaryWord(gy_word);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "error: --word: " << e.what() << "\n";
                    return kExitUsage;
                }
            }
            tfpl::TfplConfig image =
                gy_side == "left" ? tfpl::wieland_left(cfg, word.value_or(b.u))
                                  : tfpl::wieland_right(cfg, word.value_or(b.v));
            std::cout << image.serialize() << "\n";
            return 0;
        }

        if (*orbit) {
            tfpl::TfplConfig cfg = load_config(orbit_in);
            auto result = tfpl::iterate_to_stable(cfg);
            for (size_t m = 0; m < result.trail.size(); ++m)
                std::cout << "step " << m << " " << result.trail[m].to_string() << "\n";
            std::cout << "steps " << result.steps << "\n";
            std::cout << "stable " << result.stable.boundary().to_string() << "\n";
            return 0;
        }

        if (*verify) {
            if (verify_size < 1 || verify_size > cap) {
                std::cerr << "error: size " << verify_size << " outside 1.." << cap
                          << " (set TFPL_MAX_SIZE to raise the cap)\n";
                return kExitUsage;
            }
            SuiteResult res;
            if (suite == "inverse") res = suite_inverse(verify_size, cap);
            else if (suite == "stability") res = suite_stability(verify_size, cap);
            else if (suite == "linear") res = suite_linear(verify_size, cap);
            else if (suite == "conditions") res = suite_conditions(verify_size, cap);
            else if (suite == "lr") res = suite_lr(verify_size, cap);
            else if (suite == "sweep") res = suite_sweep(verify_size, cap);
            else res = suite_fpl_rotation(verify_size, cap);
            for (const std::string& line : res.lines) std::cout << line << "\n";
            std::cout << "suite " << suite << " size " << verify_size << ": "
                      << (res.failures == 0 ? "PASS" : "FAIL") << " ("
                      << res.checks << " checks, " << res.failures << " failures)\n";
            return res.failures == 0 ? 0 : kExitCounterexample;
        }

        if (*render) {
            tfpl::TfplConfig cfg = load_config(render_in);
            if (render_format == "ascii")
                std::cout << tfpl::ascii_render(cfg, render_parity);
            else
                std::cout << tfpl::svg_render(cfg, render_parity);
            return 0;
        }
    } catch (const tfpl::SerializationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
