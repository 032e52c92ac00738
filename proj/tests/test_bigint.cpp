#include <doctest.h>

#include <random>

#include "cartcode/bigint.hpp"
#include "cartcode/errors.hpp"

using cartcode::BigUint;

TEST_CASE("BigUint basics and decimal printing") {
    CHECK(BigUint().str() == "0");
    CHECK(BigUint(0).is_zero());
    CHECK(BigUint(123456789).str() == "123456789");
    CHECK(BigUint::pow(2, 64).str() == "18446744073709551616");
    CHECK(BigUint::pow(10, 0).str() == "1");
}

TEST_CASE("BigUint power computed along two routes agrees") {
    CHECK(BigUint::pow(9, 27) == BigUint::pow(3, 54));
    CHECK(BigUint::pow(4, 16) == BigUint::pow(2, 32));
    CHECK(BigUint::pow(8, 10) == BigUint::pow(2, 30));
}

TEST_CASE("BigUint multiplication matches 128-bit arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng();
        const std::uint64_t b = rng();
        const unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
        BigUint big = BigUint(a) * BigUint(b);
        const std::uint64_t lo = static_cast<std::uint64_t>(wide);
        const std::uint64_t hi = static_cast<std::uint64_t>(wide >> 64);
        BigUint expect = BigUint(hi) * (BigUint::pow(2, 64)) + BigUint(lo);
        CHECK(big == expect);
    }
}

TEST_CASE("BigUint addition, subtraction and comparison") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng() >> 1;
        const std::uint64_t b = rng() >> 1;
        CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
        const std::uint64_t lo = std::min(a, b);
        const std::uint64_t hi = std::max(a, b);
        CHECK((BigUint(hi) - BigUint(lo)).to_u64() == hi - lo);
        CHECK((BigUint(a) <=> BigUint(b)) == (a <=> b));
    }
    BigUint big = BigUint::pow(7, 40);
    CHECK(big - big == BigUint(0));
}

TEST_CASE("BigUint exact division and modulus") {
    BigUint v = BigUint::pow(9, 27);
    BigUint w = v;
    for (int i = 0; i < 27; ++i) w.div_exact(9);
    CHECK(w == BigUint(1));
    CHECK(v.mod(9) == 0);
    CHECK(v.mod(2) == 1); // odd
    CHECK((BigUint::pow(10, 30) + BigUint(7)).mod(10) == 7);
    CHECK_THROWS_AS(BigUint(10).div_exact(3), cartcode::BadParameters);
    CHECK_THROWS_AS((BigUint::pow(2, 100)).to_u64(), cartcode::TooLarge);
}
