#include "entcc/qprotocols.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace entcc {

namespace {

constexpr double kAngleLowZero = -std::numbers::pi / 16.0;
constexpr double kAngleLowOne = 3.0 * std::numbers::pi / 16.0;

int string_parity(std::string_view bits) {
    int parity = 0;
    for (char c : bits) parity ^= c - '0';
    return parity;
}

}  // namespace

RunResult run_ghz(const TripleInput& t, RandomStream& rng) {
    if (!even_sum_promise(t)) {
        throw std::domain_error("ghz protocol requires the even-sum promise");
    }
    StateVector state = ghz_state();
    const int values[3] = {t.x, t.y, t.z};
    for (int q = 0; q < 3; ++q) {
        if (values[q] & 1) state = apply_gate(state, hadamard(), q);
    }
    const std::string outcome = sample(measure_distribution(state), rng);

    RunResult result;
    for (int q = 0; q < 3; ++q) result.measured.push_back(outcome[static_cast<std::size_t>(q)] - '0');
    for (int q = 0; q < 3; ++q) {
        result.transcript.push_back({static_cast<Party>(q), (values[q] >> 1) ^ result.measured[static_cast<std::size_t>(q)]});
    }
    const int common =
        result.transcript[0].bit ^ result.transcript[1].bit ^ result.transcript[2].bit;
    result.outputs = {common, common, common};
    return result;
}

double ghz_parity_probability(int x0, int y0, int z0) {
    const int bits[3] = {x0, y0, z0};
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::domain_error("low bits must be 0 or 1");
    }
    if ((x0 ^ y0 ^ z0) != 0) throw std::domain_error("low-bit parity promise violated");

    StateVector state = ghz_state();
    for (int q = 0; q < 3; ++q) {
        if (bits[q]) state = apply_gate(state, hadamard(), q);
    }
    const int want = x0 | y0 | z0;
    double total = 0.0;
    for (const auto& [label, p] : measure_distribution(state).probabilities) {
        if (string_parity(label) == want) total += p;
    }
    return total;
}

RunResult run_chsh(const PairInput& p, RandomStream& rng) {
    g_value(p);  // validates the input range
    StateVector state = epr_state();
    const int values[2] = {p.x, p.y};
    for (int q = 0; q < 2; ++q) {
        const double theta = (values[q] & 1) ? kAngleLowOne : kAngleLowZero;
        state = apply_gate(state, rotation(theta), q);
    }
    const std::string outcome = sample(measure_distribution(state), rng);

    RunResult result;
    for (int q = 0; q < 2; ++q) result.measured.push_back(outcome[static_cast<std::size_t>(q)] - '0');
    for (int q = 0; q < 2; ++q) {
        result.transcript.push_back({static_cast<Party>(q), (values[q] >> 1) ^ result.measured[static_cast<std::size_t>(q)]});
    }
    const int common = result.transcript[0].bit ^ result.transcript[1].bit;
    result.outputs = {common, common};
    return result;
}

double chsh_success_probability(const PairInput& p) {
    g_value(p);  // validates the input range
    StateVector state = epr_state();
    state = apply_gate(state, rotation((p.x & 1) ? kAngleLowOne : kAngleLowZero), 0);
    state = apply_gate(state, rotation((p.y & 1) ? kAngleLowOne : kAngleLowZero), 1);
    // The common output x1^y1^a^b equals g exactly when a^b = x0 & y0.
    const int target = (p.x & 1) & (p.y & 1);
    double total = 0.0;
    for (const auto& [label, prob] : measure_distribution(state).probabilities) {
        if (string_parity(label) == target) total += prob;
    }
    return total;
}

double estimate_ghz_success(const TripleInput& t, long shots, std::uint64_t seed) {
    if (shots < 1) throw std::domain_error("shots must be >= 1");
    const int expected = f_value(t);
    RandomStream rng(seed);
    long correct = 0;
    for (long i = 0; i < shots; ++i) {
        if (run_ghz(t, rng).outputs[0] == expected) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(shots);
}

double estimate_chsh_success(const PairInput& p, long shots, std::uint64_t seed) {
    if (shots < 1) throw std::domain_error("shots must be >= 1");
    const int expected = g_value(p);
    RandomStream rng(seed);
    long correct = 0;
    for (long i = 0; i < shots; ++i) {
        if (run_chsh(p, rng).outputs[0] == expected) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(shots);
}

double estimate_success(std::string_view protocol, std::span<const int> input, long shots,
                        std::uint64_t seed) {
    if (protocol == "ghz") {
        if (input.size() != 3) throw std::domain_error("ghz input is x y z");
        return estimate_ghz_success({input[0], input[1], input[2]}, shots, seed);
    }
    if (protocol == "chsh") {
        if (input.size() != 2) throw std::domain_error("chsh input is x y");
        return estimate_chsh_success({input[0], input[1]}, shots, seed);
    }
    throw std::domain_error("unknown protocol '" + std::string(protocol) + "'");
}

}  // namespace entcc
