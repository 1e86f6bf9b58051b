// Command-line front end: verify / simulate / enumerate, with reproducible
// seeded runs and machine-readable reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entcc/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

entcc::ReportFormat parse_format(const std::string& name) {
    return name == "kv" ? entcc::ReportFormat::Kv : entcc::ReportFormat::Text;
}

void write_artifacts(const entcc::Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (report.artifacts.size() == 1) {
        out << report.artifacts.begin()->second << '\n';
    } else {
        for (const auto& [name, value] : report.artifacts) out << name << ' ' << value << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact separations between entanglement-assisted and classical broadcast protocols"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();

    std::uint64_t seed = entcc::kDefaultSeed;
    bool entropy = false;
    app.add_option("--seed", seed, "Random seed (default keeps runs reproducible)");
    app.add_flag("--entropy", entropy, "Seed from the system entropy source instead");

    std::string witness_out;
    app.add_option("--witness-out", witness_out, "Write report artifacts (witness trees) to a file");

    CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive claim check");
    verify->fallthrough();
    std::string claim;
    verify->add_option("claim", claim, "Claim name, or 'all'")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Sample protocol runs");
    simulate->fallthrough();
    std::string protocol;
    std::vector<int> input;
    long shots = 1;
    simulate->add_option("protocol", protocol, "ghz or chsh")->required();
    simulate->add_option("--input", input, "Party inputs (x y z for ghz, x y for chsh)")
        ->required()
        ->expected(2, 3);
    simulate->add_option("--shots", shots, "Number of runs")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "Exhaustive classical protocol search");
    enumerate->fallthrough();
    std::string function_name;
    int depth = 0;
    enumerate->add_option("function", function_name, "f or g")->required();
    enumerate->add_option("--depth", depth, "Tree depth (0..5 for f, 0..3 for g)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (entropy) {
        if (app.count("--seed") > 0) {
            std::cerr << "error: --seed and --entropy are mutually exclusive\n";
            return kExitUsage;
        }
        seed = std::random_device{}();
    }

    try {
        entcc::Report report;
        if (*verify) {
            report = entcc::verify_claim(claim, seed);
        } else if (*simulate) {
            report = entcc::simulate_report(protocol, input, shots, seed);
        } else {
            report = entcc::enumerate_report(function_name, depth);
        }
        entcc::write_report(report, parse_format(format), std::cout);
        if (!witness_out.empty()) write_artifacts(report, witness_out);
        return report.pass() ? kExitPass : kExitFail;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        if (*verify) {
            std::cerr << "valid claims:";
            for (const std::string& name : entcc::claim_names()) std::cerr << ' ' << name;
            std::cerr << " all\n";
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
