#include "entcc/functions.hpp"

#include <bit>
#include <stdexcept>

#include "doctest.h"

using namespace entcc;

namespace {

// Test-side oracle: the arithmetic definition, evaluated independently.
int f_oracle(int x, int y, int z) { return ((x + y + z) % 4) / 2; }

// Test-side oracle for the per-position AND parity, bit by bit.
int gip_oracle(const GipInstance& inst) {
    int value = 0;
    for (int i = 0; i < inst.n; ++i) {
        value ^= (inst.x >> i & 1) & (inst.y >> i & 1) & (inst.z >> i & 1);
    }
    return value;
}

}  // namespace

TEST_CASE("even_sum_promise") {
    CHECK(even_sum_promise({0, 0, 0}));
    CHECK(even_sum_promise({1, 1, 0}));
    CHECK_FALSE(even_sum_promise({1, 0, 0}));
    CHECK_THROWS_AS(even_sum_promise({4, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(even_sum_promise({0, -1, 0}), std::domain_error);
}

TEST_CASE("f on the promise set") {
    CHECK(f_value({0, 0, 0}) == 0);
    CHECK(f_value({1, 1, 0}) == 1);
    CHECK(f_value({3, 1, 0}) == 0);
    CHECK(f_value({2, 2, 0}) == 0);
    CHECK_THROWS_AS(f_value({1, 0, 0}), std::domain_error);
}

TEST_CASE("both forms of f agree with the oracle on every promise triple") {
    int checked = 0;
    for (const TripleInput& t : promise_triples()) {
        CHECK(f_value(t) == f_oracle(t.x, t.y, t.z));
        ++checked;
    }
    CHECK(checked == 32);
}

TEST_CASE("f is symmetric in its arguments") {
    for (const TripleInput& t : promise_triples()) {
        const int v = f_value(t);
        CHECK(f_value({t.x, t.z, t.y}) == v);
        CHECK(f_value({t.y, t.x, t.z}) == v);
        CHECK(f_value({t.y, t.z, t.x}) == v);
        CHECK(f_value({t.z, t.x, t.y}) == v);
        CHECK(f_value({t.z, t.y, t.x}) == v);
    }
}

TEST_CASE("g reproduces its full truth table") {
    // Rows are y, columns are x.
    constexpr int kTable[4][4] = {
        {0, 0, 1, 1},
        {0, 1, 1, 0},
        {1, 1, 0, 0},
        {1, 0, 0, 1},
    };
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            CAPTURE(x);
            CAPTURE(y);
            CHECK(g_value({x, y}) == kTable[y][x]);
        }
    }
    CHECK(g_value({0, 0}) == 0);
    CHECK(g_value({2, 0}) == 1);
    CHECK(g_value({3, 3}) == 1);
    CHECK_THROWS_AS(g_value({0, 4}), std::domain_error);
}

TEST_CASE("gip examples") {
    CHECK(gip_value({2, 0b11, 0b11, 0b11}) == 0);
    CHECK(gip_value({1, 1, 0, 0}) == 0);
    CHECK(gip_value({3, 0b111, 0b100, 0b100}) == 1);
    CHECK_THROWS_AS(gip_value({2, 0b11, 0b01, 0b11}), std::domain_error);  // promise broken
    CHECK_THROWS_AS(gip_value({0, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(gip_value({17, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(gip_value({2, 0b100, 0b111, 0b000}), std::domain_error);  // bits past n
}

TEST_CASE("zero-count reduction on the frozen examples") {
    CHECK(zero_count_triple({2, 0b11, 0b11, 0b11}) == TripleInput{0, 0, 0});
    CHECK(f_value({0, 0, 0}) == 0);
    CHECK(gip_value({2, 0b11, 0b11, 0b11}) == 0);

    CHECK(zero_count_triple({1, 1, 0, 0}) == TripleInput{0, 1, 1});
    CHECK(f_value({0, 1, 1}) == 1);
    CHECK(gip_value({1, 1, 0, 0}) == 0);
    CHECK((f_value({0, 1, 1}) ^ (1 % 2)) == 0);

    const GipInstance wide{4, 0b1111, 0b1100, 0b1100};
    CHECK(zero_count_triple(wide) == TripleInput{0, 2, 2});
    CHECK(f_value({0, 2, 2}) == 0);
    CHECK(gip_value(wide) == 0);
}

TEST_CASE("reduction identity holds exhaustively up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        const std::vector<GipInstance> instances = all_gip_instances(n);
        CHECK(instances.size() == (1u << (2 * n)));
        for (const GipInstance& inst : instances) {
            REQUIRE(gip_promise(inst));
            const TripleInput reduced = zero_count_triple(inst);
            REQUIRE(even_sum_promise(reduced));
            const int expected = gip_oracle(inst);
            REQUIRE(gip_value(inst) == expected);
            REQUIRE((f_value(reduced) ^ (n % 2)) == expected);
        }
    }
}

TEST_CASE("input enumerations have the right sizes") {
    CHECK(promise_triples().size() == 32);
    CHECK(all_pairs().size() == 16);
    CHECK_THROWS_AS(all_gip_instances(0), std::domain_error);
    CHECK_THROWS_AS(all_gip_instances(17), std::domain_error);
}
