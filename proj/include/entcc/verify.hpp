#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entcc {

enum class ReportFormat { Text, Kv };

// One named sub-check of a report; detail is a "key=value ..." string.
struct Check {
    std::string name;
    std::string detail;
    bool pass = true;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::map<std::string, std::string> artifacts;  // e.g. serialized witness trees
    double duration_ms = 0.0;

    bool pass() const;
    void add(std::string name, std::string detail, bool ok);
};

void write_report(const Report& report, ReportFormat format, std::ostream& out);

// Fixed 12-decimal rendering used for every probability in reports.
std::string format_probability(double p);

// Bare invocations are reproducible: every command that samples defaults
// to this seed.
inline constexpr std::uint64_t kDefaultSeed = 12345;

// Claims accepted by `verify` (excluding the aggregate "all").
std::vector<std::string> claim_names();

// Runs one claim ("all" aggregates every claim plus the separation
// headlines). Unknown claims raise std::domain_error.
Report verify_claim(std::string_view claim, std::uint64_t seed);

// Sampled protocol runs with the exact value alongside; per-run lines are
// included when shots <= 20.
Report simulate_report(std::string_view protocol, std::span<const int> input, long shots,
                       std::uint64_t seed);

// Feasibility search for "f" (depth 0..5) or best two-party success for
// "g" (depth 0..3).
Report enumerate_report(std::string_view function_name, int depth);

}  // namespace entcc
