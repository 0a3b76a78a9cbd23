#include "doctest.h"

#include <random>

#include "monolab/domain.hpp"
#include "monolab/rng_util.hpp"

using namespace monolab;

TEST_SUITE_BEGIN("domain");

TEST_CASE("val on hand points") {
    CHECK(val(BitPoint::from_bits({0, 0, 0, 0})) == 0);
    CHECK(val(BitPoint::from_bits({1, 0, 1})) == 5);
    CHECK(val(BitPoint::from_bits({1, 1, 1, 1})) == 15);
}

TEST_CASE("val equals the bit-weight formula") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(uniform_below(rng, 16));
        const std::uint32_t w = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << m));
        const BitPoint x(w, m);
        std::uint64_t expect = 0;
        const auto bits = x.bits();
        for (int i = 1; i <= m; ++i) {
            expect += (std::uint64_t{1} << (i - 1)) * static_cast<std::uint64_t>(bits[static_cast<std::size_t>(i - 1)]);
        }
        CHECK(val(x) == expect);
    }
}

TEST_CASE("phi concatenates binary representations, y1 least significant") {
    const DomainParams p42 = DomainParams::make(4, 2);
    CHECK(phi(GridPoint{{0, 0}}, p42) == BitPoint::parse("0000"));
    CHECK(phi(GridPoint{{3, 1}}, p42) == BitPoint::parse("1110"));
    const DomainParams p81 = DomainParams::make(8, 1);
    CHECK(phi(GridPoint{{5}}, p81) == BitPoint::parse("101"));
}

TEST_CASE("phi rejects out-of-range input") {
    const DomainParams p = DomainParams::make(4, 2);
    CHECK_THROWS_AS(phi(GridPoint{{4, 0}}, p), std::invalid_argument);
    CHECK_THROWS_AS(phi(GridPoint{{-1, 0}}, p), std::invalid_argument);
    CHECK_THROWS_AS(phi(GridPoint{{1, 2, 3}}, p), std::invalid_argument);
}

TEST_CASE("phi_inverse on hand points and exhaustive round trip") {
    const DomainParams p = DomainParams::make(4, 2);
    CHECK(phi_inverse(BitPoint::parse("0000"), p) == GridPoint{{0, 0}});
    CHECK(phi_inverse(BitPoint::parse("1110"), p) == GridPoint{{3, 1}});
    for (std::uint32_t w = 0; w < p.point_count(); ++w) {
        const GridPoint y = phi_inverse(BitPoint(w, p.m), p);
        CHECK(phi(y, p) == BitPoint(w, p.m));
    }
    CHECK_THROWS_AS(phi_inverse(BitPoint::parse("000"), p), std::invalid_argument);
}

TEST_CASE("phi bijection exhaustive at m = 16") {
    for (const DomainParams& p : {DomainParams::make(16, 4), DomainParams::make(4, 8)}) {
        for (std::uint32_t w = 0; w < p.point_count(); ++w) {
            const BitPoint x(w, p.m);
            CHECK(phi(phi_inverse(x, p), p) == x);
        }
    }
}

TEST_CASE("grid_leq basics") {
    CHECK(grid_leq(GridPoint{{0, 0}}, GridPoint{{3, 1}}));
    CHECK_FALSE(grid_leq(GridPoint{{2, 1}}, GridPoint{{1, 3}}));
    CHECK(grid_leq(GridPoint{{1, 1}}, GridPoint{{1, 1}}));
    CHECK_THROWS_AS(grid_leq(GridPoint{{1}}, GridPoint{{1, 2}}), std::invalid_argument);
}

TEST_CASE("cube_leq basics") {
    CHECK(cube_leq(BitPoint::parse("0010"), BitPoint::parse("0110")));
    CHECK_FALSE(cube_leq(BitPoint::parse("10"), BitPoint::parse("01")));
    for (std::uint32_t w = 0; w < 16; ++w) CHECK(cube_leq(BitPoint(w, 4), BitPoint(w, 4)));
    CHECK_THROWS_AS(cube_leq(BitPoint(0, 2), BitPoint(0, 3)), std::invalid_argument);
}

TEST_CASE("phi embeds the grid order into the val total order") {
    for (int d = 1; d <= 3; ++d) {
        const DomainParams p = DomainParams::make(4, d);
        for (std::uint32_t a = 0; a < p.point_count(); ++a) {
            for (std::uint32_t b = 0; b < p.point_count(); ++b) {
                if (a == b) continue;
                const GridPoint u = phi_inverse(BitPoint(a, p.m), p);
                const GridPoint v = phi_inverse(BitPoint(b, p.m), p);
                if (grid_leq(u, v)) CHECK(val(phi(u, p)) < val(phi(v, p)));
            }
        }
    }
}

TEST_CASE("val order does not imply cube comparability") {
    const BitPoint x = BitPoint::parse("10");
    const BitPoint y = BitPoint::parse("01");
    CHECK(val(x) < val(y));
    CHECK_FALSE(cube_leq(x, y));
    CHECK_FALSE(cube_leq(y, x));
}

TEST_CASE("cube order refines the val order") {
    for (std::uint32_t a = 0; a < 64; ++a) {
        for (std::uint32_t b = 0; b < 64; ++b) {
            if (cube_leq(BitPoint(a, 6), BitPoint(b, 6))) CHECK(a <= b);
        }
    }
}

TEST_CASE("bitstring format is little-endian") {
    const BitPoint x = BitPoint::parse("0110");
    CHECK(x.bit(1) == 0);
    CHECK(x.bit(2) == 1);
    CHECK(x.bit(3) == 1);
    CHECK(x.bit(4) == 0);
    CHECK(val(x) == 6);
    CHECK(x.str() == "0110");
    CHECK(BitPoint::parse(x.str()) == x);
}

TEST_CASE("point parsing and construction reject malformed input") {
    CHECK_THROWS_AS(BitPoint::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint::parse("01x0"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint(0, kMaxPointBits + 1), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint(0, 3).bit(4), std::invalid_argument);
    CHECK_THROWS_AS(BitPoint(0, 3).with_bit_flipped(0), std::invalid_argument);
}

TEST_CASE("with_bit_flipped is an involution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(uniform_below(rng, 14));
        const BitPoint x(static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << m)), m);
        const int j = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)));
        CHECK(x.with_bit_flipped(j).with_bit_flipped(j) == x);
        CHECK(x.with_bit_flipped(j).bit(j) == 1 - x.bit(j));
    }
}

TEST_CASE("grid point text format") {
    CHECK(GridPoint::parse("3,1") == GridPoint{{3, 1}});
    CHECK(GridPoint{{0, 2, 7}}.str() == "0,2,7");
    CHECK(GridPoint::parse(GridPoint{{5}}.str()) == GridPoint{{5}});
    CHECK_THROWS_AS(GridPoint::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(GridPoint::parse("a,2"), std::invalid_argument);
}

TEST_CASE("domain params validate their inputs") {
    const DomainParams p = DomainParams::make(8, 2);
    CHECK(p.ell == 3);
    CHECK(p.m == 6);
    CHECK_FALSE(p.is_cube());
    CHECK(DomainParams::cube(5).is_cube());
    CHECK_THROWS_AS(DomainParams::make(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(DomainParams::make(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(DomainParams::make(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(DomainParams::make(4, 13), CapacityError);
}

TEST_SUITE_END();
