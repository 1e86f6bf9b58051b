#pragma once

#include <cstdint>
#include <random>

namespace entcc {

// Seedable deterministic random stream. Unit-interval draws take the top
// 53 bits of the raw engine output, so a given seed yields the same
// sequence on every platform and standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace entcc
