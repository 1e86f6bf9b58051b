#include "entcc/functions.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace entcc {

namespace {

void require_two_bits(int value, const char* name) {
    if (value < 0 || value > 3) {
        throw std::domain_error(std::string(name) + " must be in 0..3");
    }
}

void require_triple(const TripleInput& t) {
    require_two_bits(t.x, "x");
    require_two_bits(t.y, "y");
    require_two_bits(t.z, "z");
}

void require_instance(const GipInstance& inst) {
    if (inst.n < 1 || inst.n > kMaxGipBits) {
        throw std::domain_error("n must be in 1.." + std::to_string(kMaxGipBits));
    }
    const std::uint32_t mask = (1u << inst.n) - 1;
    if ((inst.x | inst.y | inst.z) & ~mask) {
        throw std::domain_error("instance has bits beyond position n");
    }
}

}  // namespace

bool even_sum_promise(const TripleInput& t) {
    require_triple(t);
    return (t.x + t.y + t.z) % 2 == 0;
}

int f_value(const TripleInput& t) {
    if (!even_sum_promise(t)) {
        throw std::domain_error("f is undefined off the even-sum promise");
    }
    const int arithmetic = ((t.x + t.y + t.z) % 4) / 2;
    const int x1 = t.x >> 1, x0 = t.x & 1;
    const int y1 = t.y >> 1, y0 = t.y & 1;
    const int z1 = t.z >> 1, z0 = t.z & 1;
    const int bitwise = x1 ^ y1 ^ z1 ^ (x0 | y0 | z0);
    if (arithmetic != bitwise) {
        throw std::logic_error("f: arithmetic and bitwise forms disagree");
    }
    return arithmetic;
}

int g_value(const PairInput& p) {
    require_two_bits(p.x, "x");
    require_two_bits(p.y, "y");
    return (p.x >> 1) ^ (p.y >> 1) ^ ((p.x & 1) & (p.y & 1));
}

bool gip_promise(const GipInstance& inst) {
    require_instance(inst);
    const std::uint32_t mask = (1u << inst.n) - 1;
    return (inst.x ^ inst.y ^ inst.z) == mask;
}

int gip_value(const GipInstance& inst) {
    if (!gip_promise(inst)) {
        throw std::domain_error("gip is undefined off the bitwise promise");
    }
    return std::popcount(inst.x & inst.y & inst.z) & 1;
}

TripleInput zero_count_triple(const GipInstance& inst) {
    if (!gip_promise(inst)) {
        throw std::domain_error("reduction is undefined off the bitwise promise");
    }
    const auto zeros_mod4 = [&](std::uint32_t bits) {
        return (inst.n - std::popcount(bits)) % 4;
    };
    return TripleInput{zeros_mod4(inst.x), zeros_mod4(inst.y), zeros_mod4(inst.z)};
}

std::vector<GipInstance> all_gip_instances(int n) {
    if (n < 1 || n > kMaxGipBits) {
        throw std::domain_error("n must be in 1.." + std::to_string(kMaxGipBits));
    }
    // Odd-parity column patterns (x_i, y_i, z_i).
    static constexpr std::array<std::array<std::uint32_t, 3>, 4> kColumns{
        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}};
    std::vector<GipInstance> instances;
    instances.reserve(1u << (2 * n));
    const std::uint64_t total = 1ull << (2 * n);
    for (std::uint64_t choice = 0; choice < total; ++choice) {
        GipInstance inst{n, 0, 0, 0};
        for (int i = 0; i < n; ++i) {
            const auto& column = kColumns[(choice >> (2 * i)) & 3];
            inst.x |= column[0] << i;
            inst.y |= column[1] << i;
            inst.z |= column[2] << i;
        }
        instances.push_back(inst);
    }
    return instances;
}

std::vector<TripleInput> promise_triples() {
    std::vector<TripleInput> triples;
    triples.reserve(32);
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            for (int z = 0; z < 4; ++z) {
                if ((x + y + z) % 2 == 0) triples.push_back({x, y, z});
            }
        }
    }
    return triples;
}

std::vector<PairInput> all_pairs() {
    std::vector<PairInput> pairs;
    pairs.reserve(16);
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) pairs.push_back({x, y});
    }
    return pairs;
}

}  // namespace entcc
