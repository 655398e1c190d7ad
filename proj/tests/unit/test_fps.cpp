#include <doctest.h>

#include <foursq/fps.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using namespace foursq;

namespace {

TruncatedSeries S(std::initializer_list<long> c) { return TruncatedSeries::from_ints(c); }

TruncatedSeries from_poly(const oracle::Poly &p) { return TruncatedSeries(p); }

} // namespace

TEST_CASE("construction")
{
    CHECK_THROWS_AS(TruncatedSeries(0), std::invalid_argument);
    CHECK(TruncatedSeries::zero(7).order() == 7);
    CHECK(TruncatedSeries::zero(7).is_zero());
    CHECK(TruncatedSeries::one(3) == S({1, 0, 0}));
    CHECK(TruncatedSeries::monomial(5, 2, 4) == S({0, 0, 5, 0}));
    // a monomial at or past the order truncates away
    CHECK(TruncatedSeries::monomial(5, 4, 4).is_zero());
}

TEST_CASE("coefficient past the order is an error")
{
    const auto s = S({1, 2, 3});
    CHECK(s.coeff(2) == 3);
    CHECK_THROWS_AS(s.coeff(3), TruncationError);
    CHECK_THROWS_AS(s.coeff(100), SeriesError);
}

TEST_CASE("add")
{
    CHECK(S({1, 1}) + S({1, -1}) == S({2, 0}));
    const auto s = S({3, -1, 4, 1});
    CHECK(s + TruncatedSeries::zero(4) == s);
    const auto h = h_series(1, 5);
    CHECK(h + h == Integer(2) * h);
    CHECK(h + h == S({2, 4, 4, 4, 4}));
    // orders combine to the minimum
    CHECK((S({1, 2, 3}) + S({1, 1})).order() == 2);
    CHECK((S({1, 2, 3}) - S({1, 2, 3})).is_zero());
    CHECK(-S({1, -2}) == S({-1, 2}));
}

TEST_CASE("mul")
{
    CHECK(S({1, 1, 0}) * S({1, -1, 0}) == S({1, 0, -1}));
    const auto s = S({2, 0, -7, 1});
    CHECK(s * TruncatedSeries::one(4) == s);
    const auto h = h_series(2, 10);
    CHECK(h * invert(h) == TruncatedSeries::one(10));
    CHECK((S({1, 1, 1}) * S({1, 1})).order() == 2);

    const oracle::Poly a{3, -1, 4, 1, -5, 9, 2, -6};
    const oracle::Poly b{2, 7, -1, 8, 2, 8, -1, 8};
    CHECK(from_poly(a) * from_poly(b) == from_poly(oracle::mul(a, b, 8)));
}

TEST_CASE("invert")
{
    CHECK(invert(S({1, -1, 0, 0})) == S({1, 1, 1, 1}));
    CHECK(invert(TruncatedSeries::one(6)) == TruncatedSeries::one(6));
    CHECK(invert(h_series(1, 4)) == S({1, -2, 2, -2}));
    CHECK(invert(S({-1, 1})) == S({-1, -1}));
    CHECK_THROWS_AS(invert(TruncatedSeries::zero(5)), NotInvertibleError);
    CHECK_THROWS_AS(invert(S({2, 1})), NotInvertibleError);
    CHECK_THROWS_AS(invert(S({0, 1})), NotInvertibleError);
}

TEST_CASE("pow")
{
    CHECK(pow(S({1, 1, 0, 0}), 2) == S({1, 2, 1, 0}));
    const auto s = S({1, 5, -3});
    CHECK(pow(s, 1) == s);
    CHECK(pow(s, 0) == TruncatedSeries::one(3));
    const auto t4 = pow(theta_full(6), 4);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(t4.coeff(i) == oracle::r4_brute(static_cast<std::int64_t>(i)));
    }
    CHECK(t4 == S({1, 8, 24, 32, 24, 48}));
}

TEST_CASE("substitute_neg_q")
{
    CHECK(substitute_neg_q(S({1, 1, 1})) == S({1, -1, 1}));
    const auto s = S({4, -3, 2, 9, -1});
    CHECK(substitute_neg_q(substitute_neg_q(s)) == s);
    CHECK(substitute_neg_q(theta_partial(1, 5)) == S({1, 2, 0, 0, 0}));
}

TEST_CASE("shift_up")
{
    CHECK(shift_up(S({1, 2, 3, 4}), 2) == S({0, 0, 1, 2}));
    CHECK(shift_up(S({1, 2}), 5).is_zero());
}

TEST_CASE("expand_unit_factor")
{
    CHECK(expand_unit_factor(-1, 1, -1, 3) == S({1, 1, 1}));
    // (1+q^2)^{-2} = 1 - 2q^2 + 3q^4 - ...
    CHECK(expand_unit_factor(1, 2, -2, 5) == from_poly(oracle::negative_binomial(1, 2, -2, 5)));
    CHECK(expand_unit_factor(1, 2, -2, 5) == S({1, 0, -2, 0, 3}));
    CHECK(expand_unit_factor(1, 1, 0, 4) == TruncatedSeries::one(4));
    CHECK(expand_unit_factor(1, 3, 2, 8) == S({1, 0, 0, 2, 0, 0, 1, 0}));
    for (int sign : {-1, 1}) {
        for (long m = 1; m <= 4; ++m) {
            for (long e = -5; e <= -1; ++e) {
                CHECK(expand_unit_factor(sign, m, e, 30) == from_poly(oracle::negative_binomial(sign, m, e, 30)));
            }
            // positive and negative powers are inverse to each other
            CHECK(expand_unit_factor(sign, m, 3, 30) * expand_unit_factor(sign, m, -3, 30)
                  == TruncatedSeries::one(30));
        }
    }
}

TEST_CASE("h_series")
{
    CHECK(h_series(0, 5) == TruncatedSeries::one(5));
    CHECK(h_series(1, 4) == S({1, 2, 2, 2}));
    CHECK(h_series(1, 4) * S({1, -1, 0, 0}) == S({1, 1, 0, 0}));
    CHECK(h_series(-1, 5).is_zero());
    CHECK(h_series(-7, 5).order() == 5);
    for (std::int64_t n = 0; n <= 8; ++n) {
        const auto num = from_poly(oracle::product_of_binomials(1, n, 40));
        const auto den = from_poly(oracle::product_of_binomials(-1, n, 40));
        CHECK(h_series(n, 40) * den == num);
    }
}

TEST_CASE("theta")
{
    CHECK(theta_partial(0, 5) == TruncatedSeries::one(5));
    CHECK(theta_partial(1, 5) == S({1, -2, 0, 0, 0}));
    CHECK(theta_partial(2, 10) == S({1, -2, 0, 0, 2, 0, 0, 0, 0, 0}));
    CHECK(theta_full(2) == S({1, 2}));
    CHECK(theta_full(5) == S({1, 2, 0, 0, 2}));
    CHECK(theta_full(10) == S({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
}

TEST_CASE("lambert_rhs and a_prime_lhs")
{
    CHECK(lambert_rhs(1) == S({1}));
    CHECK(lambert_rhs(4) == S({1, 8, 24, 32}));
    CHECK(lambert_rhs(5).coeff(4) == 24);
    CHECK(lambert_rhs(5).coeff(4) == oracle::r4_brute(4));
    CHECK(a_prime_lhs(1) == S({1}));
    CHECK(a_prime_lhs(2).coeff(1) == -8);
    CHECK(a_prime_lhs(30) == substitute_neg_q(lambert_rhs(30)));
}

TEST_CASE("expand_z_over_1pz2")
{
    // z = -q: -q/(1-q)^2
    CHECK(expand_z_over_1pz2(SignedMonomial::neg_q_power(1), 5) == S({0, -1, -2, -3, -4}));
    // z = q^2
    CHECK(expand_z_over_1pz2(SignedMonomial::neg_q_power(2), 8) == S({0, 0, 1, 0, -2, 0, 3, 0}));
    CHECK(expand_z_over_1pz2(SignedMonomial::neg_q_power(6), 6).is_zero());
    CHECK(expand_z_over_1pz2(SignedMonomial{false, 1}, 5) == S({0, 1, -2, 3, -4}));
}

TEST_CASE("double_sum")
{
    const auto d = double_sum(40);
    const auto oracle_d = oracle::double_sum_pairs(40);
    CHECK(d.coeff(0) == 0);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == 3);
    CHECK(d.coeff(4) == 3);
    CHECK(d == from_poly(oracle_d));
    for (std::int64_t n = 1; n < 40; ++n) {
        CHECK(d.coeff(static_cast<std::size_t>(n)) == oracle::sigma_not4_brute(n));
    }
}

TEST_CASE("perturbed and printing")
{
    const auto s = S({1, 2, 3});
    CHECK(s.perturbed(1, 5) == S({1, 7, 3}));
    CHECK_THROWS_AS(s.perturbed(3, 1), TruncationError);
    CHECK(to_coeff_string(S({1, -8, 24})) == "1 -8 24");
}

TEST_CASE("property suites")
{
    const auto check = [](const props::Outcome &o, std::size_t min_cases) {
        INFO(o.failure);
        CHECK(o.ok());
        CHECK(o.cases >= min_cases);
    };
    check(props::fps_ring_axioms(0x5eed01, 300), 300);
    check(props::fps_invert(0x5eed02, 200), 200);
    check(props::fps_neg_q(0x5eed03, 200), 200);
    check(props::fps_truncation_stability(30), 465);
    check(props::fps_z_expansions(20, 80), 20);
    check(props::fps_double_sum(200), 1);
}
