// Command-line front end: load a measurement-pattern file, run or enumerate
// it, and emit JSON reports for the no-signaling, one-time-pad, decomposition,
// and heat-accounting checks.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mbqc/pattern_json.hpp"
#include "mbqc/reports.hpp"
#include "mbqc/version.hpp"

namespace {

using namespace mbqc;

int parallelism_from_env() {
    const char* raw = std::getenv("LANDAUER_MBQC_THREADS");
    if (raw == nullptr) return 1;
    try {
        const int threads = std::stoi(raw);
        return std::clamp(threads, 1, 64);
    } catch (const std::exception&) {
        throw ValidationError("LANDAUER_MBQC_THREADS is not an integer");
    }
}

std::vector<double> parse_angle_csv(const std::string& csv) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string token =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t consumed = 0;
            out.push_back(std::stod(token, &consumed));
            while (consumed < token.size() && std::isspace(static_cast<unsigned char>(token[consumed]))) {
                ++consumed;
            }
            if (consumed != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse angle '" + token + "' in angle list");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot open output file '" + out_path + "'");
    }
    file << json;
}

struct Options {
    std::string pattern_path;
    std::string out_path;
    std::uint64_t seed = 0;
    double tolerance = verify::kDefaultTolerance;
    double temperature = 300.0;
    bool natural_units = false;
    int r = 1;
    int samples = 32;
    std::string angles_a;
    std::string angles_b;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--pattern", opt.pattern_path, "pattern JSON file")->required();
    cmd->add_option("--seed", opt.seed, "RNG seed recorded in the report");
    cmd->add_option("--out", opt.out_path, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-based quantum computation simulator and heat-bound verifier"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    CLI::App* run = app.add_subcommand("run", "execute a pattern with sampled outcomes");
    add_common(run, opt);
    run->callback([&] {
        action = [&] {
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const StateVector resource = encode_input(file.input, file.pattern.layout);
            const RunResult result = run_pattern(resource, file.pattern, opt.seed);
            emit(run_report_json(result, file.pattern, opt.seed), opt.out_path);
            return 0;
        };
    });

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate all trajectories");
    add_common(enumerate, opt);
    enumerate->callback([&] {
        action = [&] {
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const StateVector resource = encode_input(file.input, file.pattern.layout);
            const auto ensemble =
                enumerate_trajectories(resource, file.pattern, parallelism_from_env());
            emit(enumerate_report_json(ensemble, opt.seed), opt.out_path);
            return 0;
        };
    });

    CLI::App* nosig = app.add_subcommand(
        "verify-nosignaling", "compare Bob's marginals under two measurement strategies");
    add_common(nosig, opt);
    nosig->add_option("--r", opt.r, "layer split: Alice measures C_r")->required();
    nosig->add_option("--angles-a", opt.angles_a, "strategy A angles, csv, one per C_r qubit")
        ->required();
    nosig->add_option("--angles-b", opt.angles_b, "strategy B angles, csv")->required();
    nosig->add_option("--tolerance", opt.tolerance, "trace-distance tolerance");
    nosig->callback([&] {
        action = [&] {
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const auto report = verify::check_no_signaling(
                file.pattern.layout, file.input, parse_angle_csv(opt.angles_a),
                parse_angle_csv(opt.angles_b), opt.r, opt.tolerance);
            emit(no_signaling_report_json(report, opt.seed), opt.out_path);
            return report.pass ? 0 : 1;
        };
    });

    CLI::App* otp = app.add_subcommand(
        "verify-otp", "check the byproduct one-time pad and the 2n-bit entropy bound");
    add_common(otp, opt);
    otp->add_option("--samples", opt.samples, "random states fed through the pad");
    otp->add_option("--tolerance", opt.tolerance, "max trace distance from I/2^n");
    otp->callback([&] {
        action = [&] {
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const auto keys = verify::otp_from_mbqc(file.pattern.layout, file.pattern);
            const auto report =
                verify::check_one_time_pad(keys, opt.samples, opt.seed, opt.tolerance);
            emit(otp_report_json(report), opt.out_path);
            return report.pass ? 0 : 1;
        };
    });

    CLI::App* decomp = app.add_subcommand(
        "verify-decomposition",
        "reconstruct every post-measurement state from byproducts and the residual cluster");
    add_common(decomp, opt);
    decomp->add_option("--tolerance", opt.tolerance, "fidelity deficit tolerance");
    decomp->callback([&] {
        action = [&] {
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const auto report = verify::check_decomposition(file.pattern, file.input,
                                                            opt.tolerance);
            emit(decomposition_report_json(report, opt.seed), opt.out_path);
            return report.pass ? 0 : 1;
        };
    });

    CLI::App* heat = app.add_subcommand("thermo-report",
                                        "Landauer/Sagawa-Ueda heat accounting for a pattern");
    add_common(heat, opt);
    heat->add_option("--temp", opt.temperature, "temperature in kelvin (or dimensionless)");
    heat->add_flag("--natural-units", opt.natural_units, "k = 1; heats in multiples of ln 2");
    heat->callback([&] {
        action = [&] {
            // Natural units default to the dimensionless temperature 1.
            if (opt.natural_units && heat->count("--temp") == 0) opt.temperature = 1.0;
            const PatternFile file = load_pattern_file(opt.pattern_path);
            const StateVector resource = encode_input(file.input, file.pattern.layout);
            const auto ensemble =
                enumerate_trajectories(resource, file.pattern, parallelism_from_env());
            const auto constants = opt.natural_units ? thermo::PhysicalConstants::natural()
                                                     : thermo::PhysicalConstants::si();
            const auto report = thermo::mbqc_heat_report(ensemble, file.pattern.layout,
                                                         opt.temperature, constants);
            emit(heat_report_json(report, opt.seed), opt.out_path);
            return report.pass ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
