#include <doctest.h>

#include <foursq/numthy.hpp>

#include "oracles.hpp"

using namespace foursq;

TEST_CASE("r4 enumeration")
{
    CHECK(r4_enumerate(0) == 1);
    CHECK(r4_enumerate(1) == 8);
    CHECK(r4_enumerate(4) == 24);
    CHECK(r4_enumerate(-3) == 0);
    const auto table = r4_table(200);
    REQUIRE(table.size() == 201);
    for (std::int64_t n = 0; n <= 200; ++n) {
        CHECK(table[static_cast<std::size_t>(n)] == oracle::r4_brute(n));
    }
    CHECK(r2_table(25)[25] == 12);
    CHECK(r2_table(3)[3] == 0);
}

TEST_CASE("divisor sums")
{
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(sigma(12) == 28);
    CHECK(sigma_not4(1) == 1);
    CHECK(sigma_not4(4) == 3);
    CHECK(sigma_not4(12) == 12);
    CHECK(weighted_divisor_sum(1) == 1);
    CHECK(weighted_divisor_sum(2) == 3);
    CHECK(weighted_divisor_sum(8) == 3);
    CHECK(weighted_divisor_sum(8) == sigma_not4(8));
    CHECK_THROWS_AS(sigma_not4(0), std::domain_error);
    CHECK_THROWS_AS(weighted_divisor_sum(0), std::domain_error);
    CHECK_THROWS_AS(sigma(-1), std::domain_error);
    CHECK_THROWS_AS(divisors(0), std::domain_error);
    for (std::int64_t n = 1; n <= 300; ++n) {
        CHECK(divisors(n) == oracle::divisors_brute(n));
        CHECK(sigma_not4(n) == oracle::sigma_not4_brute(n));
    }
}

TEST_CASE("divisor profile")
{
    const auto p = divisor_profile(12);
    CHECK(p.n == 12);
    CHECK(p.r4 == 96);
    CHECK(p.sigma_not4 == 12);
    CHECK(p.weighted == 12);
}

TEST_CASE("divisor chain")
{
    CHECK(divisor_chain_check(1).passed());
    CHECK(divisor_chain_check(16).passed());
    CHECK(sigma_not4(16) == 3);
    CHECK(divisor_chain_check(6).passed());
    CHECK(sigma_not4(6) == 12);
    CHECK(divisor_chain_check(16).subject == "divisor-chain");
    for (std::int64_t n = 1; n <= 2000; ++n) {
        CHECK(divisor_chain_check(n).passed());
        CHECK(weighted_divisor_sum(n) == sigma_not4(n));
    }
}

TEST_CASE("jacobi")
{
    CHECK(r4_enumerate(1) == 8);
    CHECK(r4_enumerate(2) == 24);
    CHECK(r4_enumerate(3) == 32);
    CHECK(sigma_not4(2) == 3);
    CHECK(sigma_not4(3) == 4);
    CHECK(jacobi_check(3, 4).passed());
    // 2000 = 2^4 5^3; divisors prime to 4 give (1 + 2)(1 + 5 + 25 + 125) = 468
    CHECK(sigma_not4(2000) == 468);
    CHECK(r4_enumerate(2000) == 3744);
    CHECK(oracle::r4_brute(2000) == 3744);
    const auto r = jacobi_check(500, 501);
    CHECK(r.passed());
    CHECK(r.checked_order == 501);
    CHECK(jacobi_oracle_check(2000).passed());
    CHECK_THROWS_AS(jacobi_check(10, 10), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_check(0, 10), std::domain_error);
}
