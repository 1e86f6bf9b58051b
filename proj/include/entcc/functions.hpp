#pragma once

#include <cstdint>
#include <vector>

namespace entcc {

// Two bits per party: x = x1 x0 in binary with x1 the high bit, and the
// same for y and z. All components range over 0..3.
struct TripleInput {
    int x = 0, y = 0, z = 0;
    bool operator==(const TripleInput&) const = default;
};

struct PairInput {
    int x = 0, y = 0;
    bool operator==(const PairInput&) const = default;
};

// x + y + z even; equivalently x0 ^ y0 ^ z0 == 0.
bool even_sum_promise(const TripleInput& t);

// ((x + y + z) mod 4) / 2, defined only on the even-sum promise. Also
// evaluates the bitwise form x1^y1^z1^(x0|y0|z0) and insists both agree.
int f_value(const TripleInput& t);

// x1 ^ y1 ^ (x0 & y0), total on all 16 pairs.
int g_value(const PairInput& p);

// Three n-bit strings with bit i of each mask holding position i.
struct GipInstance {
    int n = 0;
    std::uint32_t x = 0, y = 0, z = 0;
    bool operator==(const GipInstance&) const = default;
};

inline constexpr int kMaxGipBits = 16;

// Bitwise x ^ y ^ z equals all ones.
bool gip_promise(const GipInstance& inst);

// XOR over positions of the three-way AND; defined only on the promise.
int gip_value(const GipInstance& inst);

// Per-party zero counts mod 4. The result always satisfies the even-sum
// promise, and gip_value(inst) == f_value(zero_count_triple(inst)) ^ (n % 2).
TripleInput zero_count_triple(const GipInstance& inst);

// Every instance satisfying the bitwise promise for a given n; there are
// exactly 4^n of them (each bit column independently takes one of the
// four odd-parity patterns).
std::vector<GipInstance> all_gip_instances(int n);

std::vector<TripleInput> promise_triples();  // the 32 valid triples
std::vector<PairInput> all_pairs();          // all 16 pairs

}  // namespace entcc
