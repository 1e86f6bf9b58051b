#include "entcc/qprotocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace entcc;

namespace {

const double kExactChsh = std::cos(std::numbers::pi / 8) * std::cos(std::numbers::pi / 8);

}  // namespace

TEST_CASE("ghz runs are errorless on the spot examples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomStream rng(seed);
        CHECK(run_ghz({0, 0, 0}, rng).outputs[0] == 0);
        CHECK(run_ghz({1, 1, 0}, rng).outputs[0] == 1);
        CHECK(run_ghz({2, 2, 0}, rng).outputs[0] == 0);
    }
}

TEST_CASE("ghz rejects off-promise inputs") {
    RandomStream rng(1);
    CHECK_THROWS_AS(run_ghz({1, 0, 0}, rng), std::domain_error);
    CHECK_THROWS_AS(run_ghz({4, 0, 0}, rng), std::domain_error);
}

TEST_CASE("ghz is errorless on all 32 promise triples across 100 seeds") {
    for (const TripleInput& t : promise_triples()) {
        const int expected = f_value(t);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            RandomStream rng(seed);
            const RunResult run = run_ghz(t, rng);
            REQUIRE(run.outputs[0] == expected);
            REQUIRE(run.transcript.size() == 3);
            REQUIRE(run.outputs == std::vector<int>{expected, expected, expected});
        }
    }
}

TEST_CASE("ghz transcript is ordered Alice, Bob, Carol and masks the measurement") {
    RandomStream rng(7);
    const TripleInput t{3, 1, 0};
    const RunResult run = run_ghz(t, rng);
    REQUIRE(run.transcript.size() == 3);
    CHECK(run.transcript[0].sender == Party::Alice);
    CHECK(run.transcript[1].sender == Party::Bob);
    CHECK(run.transcript[2].sender == Party::Carol);
    CHECK(run.transcript[0].bit == ((t.x >> 1) ^ run.measured[0]));
    CHECK(run.transcript[1].bit == ((t.y >> 1) ^ run.measured[1]));
    CHECK(run.transcript[2].bit == ((t.z >> 1) ^ run.measured[2]));
}

TEST_CASE("ghz parity probability is exactly one per promise pattern") {
    CHECK(ghz_parity_probability(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghz_parity_probability(0, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghz_parity_probability(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ghz_parity_probability(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(ghz_parity_probability(1, 0, 0), std::domain_error);
    CHECK_THROWS_AS(ghz_parity_probability(2, 0, 0), std::domain_error);
}

TEST_CASE("after the conditional hadamards only the right-parity outcomes survive") {
    constexpr int kPatterns[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    for (const auto& bits : kPatterns) {
        StateVector state = ghz_state();
        for (int q = 0; q < 3; ++q) {
            if (bits[q]) state = apply_gate(state, hadamard(), q);
        }
        const int want = bits[0] | bits[1] | bits[2];
        double good = 0.0;
        for (const auto& [label, p] : measure_distribution(state).probabilities) {
            int parity = 0;
            for (char c : label) parity ^= c - '0';
            if (parity == want) {
                good += p;
            } else {
                CHECK(p <= 1e-12);
            }
        }
        CHECK(good == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("chsh runs are seed-deterministic with two-bit transcripts") {
    for (const PairInput& p : all_pairs()) {
        RandomStream a(99), b(99);
        const RunResult first = run_chsh(p, a);
        const RunResult second = run_chsh(p, b);
        CHECK(first.transcript == second.transcript);
        CHECK(first.measured == second.measured);
        CHECK(first.outputs == second.outputs);
        CHECK(first.transcript.size() == 2);
        CHECK(first.outputs[0] == first.outputs[1]);
        CHECK(first.transcript[0].sender == Party::Alice);
        CHECK(first.transcript[1].sender == Party::Bob);
    }
}

TEST_CASE("chsh exact success probability is cos^2(pi/8) for every input") {
    double low = 1.0, high = 0.0;
    for (const PairInput& p : all_pairs()) {
        const double prob = chsh_success_probability(p);
        CHECK(std::abs(prob - kExactChsh) <= 1e-12);
        low = std::min(low, prob);
        high = std::max(high, prob);
    }
    CHECK(high - low <= 1e-12);
    CHECK(std::abs(low - 0.853553390593) <= 1e-12);
}

TEST_CASE("estimate_success matches the exact values") {
    CHECK(estimate_ghz_success({0, 0, 0}, 1000, 5) == 1.0);
    CHECK(estimate_ghz_success({1, 1, 0}, 1000, 6) == 1.0);

    const double rate = estimate_chsh_success({0, 0}, 100000, 7);
    const double limit = 3.0 * std::sqrt(kExactChsh * (1 - kExactChsh) / 100000.0);
    CHECK(std::abs(rate - kExactChsh) <= limit);

    const double single = estimate_chsh_success({2, 1}, 1, 8);
    CHECK((single == 0.0 || single == 1.0));
}

TEST_CASE("estimate_success dispatches by tag") {
    const int ghz_input[3] = {1, 1, 0};
    const int chsh_input[2] = {0, 0};
    CHECK(estimate_success("ghz", ghz_input, 10, 3) == 1.0);
    CHECK(estimate_success("chsh", chsh_input, 10, 3) >= 0.0);
    CHECK_THROWS_AS(estimate_success("epr", chsh_input, 10, 3), std::domain_error);
    CHECK_THROWS_AS(estimate_success("ghz", chsh_input, 10, 3), std::domain_error);
    CHECK_THROWS_AS(estimate_success("chsh", chsh_input, 0, 3), std::domain_error);
}
