#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "entcc/functions.hpp"
#include "entcc/qcore.hpp"
#include "entcc/transcript.hpp"

namespace entcc {

// One entanglement-assisted run: the broadcast transcript, each party's
// local measurement bit, and each party's computed output. All outputs
// are the same XOR of the broadcast bits.
struct RunResult {
    Transcript transcript;
    std::vector<int> measured;
    std::vector<int> outputs;
};

// Three-party protocol on the shared GHZ state: each party applies a
// Hadamard to its qubit when its low input bit is 1, all qubits are
// measured once, and each party broadcasts its high input bit XOR its
// measured bit (order Alice, Bob, Carol). Errorless: the common output
// equals f_value(t) on every promise input.
RunResult run_ghz(const TripleInput& t, RandomStream& rng);

// Exact probability that the measured parity a^b^c equals x0|y0|z0 after
// the conditional Hadamards. Equals 1.0 for every promise-satisfying
// low-bit pattern.
double ghz_parity_probability(int x0, int y0, int z0);

// Two-party protocol on the shared EPR pair: each party rotates its qubit
// by -pi/16 (low bit 0) or 3*pi/16 (low bit 1), measures, and broadcasts
// its high input bit XOR its measured bit (Alice first).
RunResult run_chsh(const PairInput& p, RandomStream& rng);

// Exact probability that the common output equals g_value(p). Computed
// from the rotated state's amplitudes; equals cos^2(pi/8) for all inputs.
double chsh_success_probability(const PairInput& p);

// Monte-Carlo cross-checks of the exact values; shots must be >= 1.
double estimate_ghz_success(const TripleInput& t, long shots, std::uint64_t seed);
double estimate_chsh_success(const PairInput& p, long shots, std::uint64_t seed);

// Tag-dispatched front end: protocol is "ghz" (input = x y z) or "chsh"
// (input = x y); anything else is a domain error.
double estimate_success(std::string_view protocol, std::span<const int> input, long shots,
                        std::uint64_t seed);

}  // namespace entcc
