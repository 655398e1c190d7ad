#include <doctest.h>

#include <foursq/bundled.hpp>
#include <foursq/certlang.hpp>
#include <foursq/product_term.hpp>
#include <foursq/verify.hpp>

#include "oracles.hpp"

using namespace foursq;

namespace {

TruncatedSeries S(std::initializer_list<long> c) { return TruncatedSeries::from_ints(c); }

TruncatedSeries poly(std::size_t order, std::initializer_list<std::pair<std::size_t, long>> terms)
{
    TruncatedSeries s = TruncatedSeries::zero(order);
    for (const auto &[p, c] : terms) {
        s = s + TruncatedSeries::monomial(c, p, order);
    }
    return s;
}

const std::vector<CertificateSet> &bundled()
{
    static const auto sets = load_certificates(bundled_certificate_text());
    return sets;
}

CertificateSet tampered(const CertificateSet &c)
{
    CertificateSet t = c;
    t.cert = CertExpr::binary(CertExpr::Kind::multiply, c.cert, parse("1 + q"));
    return t;
}

} // namespace

TEST_CASE("product terms")
{
    CHECK(ProductTerm().to_series(4) == TruncatedSeries::one(4));
    CHECK(ProductTerm::zero().to_series(4).is_zero());
    CHECK(ProductTerm::h(-1).to_series(6).is_zero());
    CHECK(ProductTerm::h(3).to_series(30) == h_series(3, 30));
    CHECK(ProductTerm::binomial(1, 0, 3).to_series(3) == S({8, 0, 0}));
    CHECK(ProductTerm::binomial(-1, 0, 2).to_series(3).is_zero());
    CHECK_THROWS_AS(ProductTerm::binomial(-1, 0, -1), NotInvertibleError);
    // 1 + q^{-2} = q^{-2} (1 + q^2)
    const auto t = ProductTerm::q_power(2) * ProductTerm::binomial(1, -2, 1);
    CHECK(t.to_series(5) == S({1, 0, 1, 0, 0}));
    CHECK_THROWS_AS(ProductTerm::q_power(-1).to_series(4), SeriesError);
    CHECK_THROWS_AS(ProductTerm::constant(mpq_class(1, 2)).to_series(4), SeriesError);
    CHECK_THROWS_AS(ProductTerm::zero().inverse(), NotInvertibleError);
    const auto h = ProductTerm::h(4);
    CHECK((h * h.inverse()).to_series(20) == TruncatedSeries::one(20));
    CHECK(h.pow(-2).to_series(20) == pow(invert(h_series(4, 20)), 2));
}

TEST_CASE("f1")
{
    CHECK(f1(0, 0, 20) == TruncatedSeries::one(20));
    CHECK(f1(2, 3, 20).is_zero());
    CHECK(f1(2, -3, 20).is_zero());
    CHECK(f1(1, -1, 40) + f1(1, 0, 40) + f1(1, 1, 40) == TruncatedSeries::one(40));
    // f1(1,1) = -4q/(1+q)^2 * H_1^2 H_2 H_0: cross-multiplied against its denominators
    const std::size_t N = 30;
    const oracle::Poly den_q = oracle::mul(oracle::mul({1, 2, 1}, oracle::product_of_binomials(-1, 1, N), N),
                                           oracle::product_of_binomials(-1, 1, N), N);
    const oracle::Poly h2_den = oracle::product_of_binomials(-1, 2, N);
    const oracle::Poly num_q = oracle::mul(
        oracle::mul({0, -4}, oracle::mul(oracle::product_of_binomials(1, 1, N), oracle::product_of_binomials(1, 1, N), N),
                    N),
        oracle::product_of_binomials(1, 2, N), N);
    CHECK(f1(1, 1, N) * TruncatedSeries(oracle::mul(den_q, h2_den, N)) == TruncatedSeries(num_q));
}

TEST_CASE("f2")
{
    CHECK(f2(0, 0, 20) == TruncatedSeries::one(20));
    CHECK(f2(1, 0, 20) + f2(1, 1, 20) == theta_partial(1, 20));
    // -2q^2/(1+q)
    CHECK(f2(1, 1, 10) * S({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}) == poly(10, {{2, -2}}));
    CHECK(f2(1, 1, 10) == S({0, 0, -2, 2, -2, 2, -2, 2, -2, 2}));
}

TEST_CASE("g1 and g2")
{
    // g2(1,0) = -2q^2 (1-q) / ((1+q^2)(1+q))
    const std::size_t N = 20;
    const TruncatedSeries g2_den = TruncatedSeries(oracle::mul({1, 0, 1}, {1, 1}, N));
    CHECK(g2(1, 0, N) * g2_den == poly(N, {{2, -2}, {3, 2}}));
    // g1(0,0) = 4q(1+q^2)/(1-q)^4
    const TruncatedSeries g1_den(oracle::mul(oracle::mul({1, -1}, {1, -1}, N), oracle::mul({1, -1}, {1, -1}, N), N));
    CHECK(g1(0, 0, N) * g1_den == poly(N, {{1, 4}, {3, 4}}));
    for (std::int64_t n = 0; n <= 5; ++n) {
        CHECK(g1(n, n + 1, 40).is_zero());
        CHECK(g1(n, -n - 2, 40).is_zero());
        // at k = -n-1 the step F(n+1,k) - F(n,k) is nonzero, so G(n,-n-1) cannot vanish
        CHECK(g1(n, -n - 1, 40) == f1(n + 1, -n - 1, 40));
    }
}

TEST_CASE("l1 and l2")
{
    CHECK(l1(0, 20) == TruncatedSeries::one(20));
    CHECK(l2(0, 20) == TruncatedSeries::one(20));
    CHECK(l1(5, 80) == TruncatedSeries::one(80));
    CHECK(l2(2, 60) == theta_partial(2, 60));
}

TEST_CASE("lemma sweeps")
{
    for (std::int64_t n = 0; n <= 25; ++n) {
        INFO("n = " << n);
        CHECK(l1(n, 101) == TruncatedSeries::one(101));
        CHECK(l2(n, 101) == theta_partial(n, 101));
        CHECK(check_lemma_a(n, 101).passed());
        CHECK(check_lemma_b(n, 101).passed());
    }
}

TEST_CASE("check_steps")
{
    CHECK(l2(1, 20) - l2(0, 20) == poly(20, {{1, -2}}));
    CHECK(l2(3, 30) - l2(2, 30) == poly(30, {{9, -2}}));
    CHECK((l1(5, 40) - l1(4, 40)).is_zero());
    CHECK(l2_step_target(0, 20) == poly(20, {{1, -2}}));
    CHECK(l2_step_target(1, 20) == poly(20, {{4, 2}}));
    CHECK(l2_step_target(2, 30) == poly(30, {{9, -2}}));
    for (std::int64_t n = 0; n <= 9; ++n) {
        const auto r = check_steps(n, 101);
        INFO("n = " << n);
        CHECK(r.passed());
        CHECK(r.checked_order == 101);
    }
}

TEST_CASE("symbolic WZ check")
{
    for (const auto &c : bundled()) {
        INFO(c.name);
        const auto r = check_wz_symbolic(c);
        CHECK(r.passed());
        CHECK_FALSE(r.first_discrepancy.has_value());
        const auto bad = check_wz_symbolic(tampered(c));
        CHECK_FALSE(bad.passed());
        REQUIRE(bad.first_discrepancy.has_value());
        CHECK(bad.first_discrepancy->expected == 0);
        CHECK(bad.first_discrepancy->got != 0);
    }
}

TEST_CASE("numeric WZ check")
{
    const auto &a = bundled()[0];
    const auto &b = bundled()[1];
    const auto ra = check_wz_numeric(a, 3, 60);
    CHECK(ra.passed());
    CHECK(ra.params.at("k_lo") == -4);
    CHECK(ra.params.at("k_hi") == 4);
    const auto rb = check_wz_numeric(b, 0, 40);
    CHECK(rb.passed());
    CHECK(rb.params.at("k_lo") == -1);
    CHECK(rb.params.at("k_hi") == 1);
    // boundary k = n + 1 for lemma-a
    for (std::int64_t n = 0; n <= 4; ++n) {
        CHECK(f1(n + 1, n + 1, 30) - f1(n, n + 1, 30) == g1(n, n + 1, 30) - g1(n, n, 30));
    }
    for (const auto &c : bundled()) {
        for (std::int64_t n = 0; n <= 6; ++n) {
            CHECK(check_wz_numeric(c, n, 60).passed());
        }
    }
}

TEST_CASE("telescoping reconstruction and rhs steps")
{
    for (const auto &c : bundled()) {
        for (std::int64_t n = 0; n <= 10; ++n) {
            INFO(c.name << " n = " << n);
            CHECK(check_telescoping(c, n, 60).passed());
            CHECK(check_rhs_step(c, n, 60).passed());
        }
    }
}

TEST_CASE("ratio consistency")
{
    for (const auto &c : bundled()) {
        const auto r = check_ratio_consistency(c, 6, 6, 60);
        INFO(c.name);
        CHECK(r.passed());
        CHECK(r.params.at("relations") > 0);
    }
    // a wrong ratio is caught
    CertificateSet wrong = bundled()[1];
    wrong.ratio_n = parse("Y*(1 - q*X)/(1 + q*X)*q");
    CHECK_FALSE(check_ratio_consistency(wrong, 3, 3, 30).passed());
    CertificateSet wrong_cert = tampered(bundled()[0]);
    CHECK_FALSE(check_ratio_consistency(wrong_cert, 3, 3, 30).passed());
}

TEST_CASE("limits")
{
    CHECK(check_limit_a(1).passed());
    CHECK(check_limit_a(50).passed());
    CHECK(check_limit_b(1).passed());
    CHECK(check_limit_b(50).passed());
    const auto hinv = invert(h_series(50, 50));
    CHECK(hinv.coeff(1) == -2);
    CHECK(hinv.coeff(4) == 2);
    const auto bad = check_limit_a(50, Perturbation{17, 1});
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.first_discrepancy.has_value());
    CHECK(bad.first_discrepancy->power == 17);
    CHECK(bad.first_discrepancy->got - bad.first_discrepancy->expected != 0);
}

TEST_CASE("eq2 and eq3")
{
    CHECK(check_eq2(1).passed());
    CHECK(check_eq2(4).passed());
    CHECK(check_eq2(200).passed());
    CHECK(check_eq3(0, 10).passed());
    CHECK(check_eq3(1, 40).passed());
    CHECK(check_eq3(6, 80).passed());
    for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(check_eq3_mod(n).passed());
    }
    const auto bad = check_eq3(3, 40, Perturbation{0, 1});
    CHECK_FALSE(bad.passed());
    CHECK(bad.first_discrepancy->power == 0);
}

TEST_CASE("fault injection on the lemma checks")
{
    const auto a = check_lemma_a(4, 40, Perturbation{5, -3});
    CHECK_FALSE(a.passed());
    REQUIRE(a.first_discrepancy);
    CHECK(a.first_discrepancy->power == 5);
    CHECK(a.params.at("n") == 4);
    CHECK_FALSE(check_lemma_b(2, 40, Perturbation{39, 1}).passed());
    CHECK_FALSE(check_steps(2, 40, Perturbation{9, 1}).passed());
}

TEST_CASE("family selection")
{
    CHECK(family_for("lemma-a") == SummandFamily::lemma_a);
    CHECK(family_for("lemma-b") == SummandFamily::lemma_b);
    CHECK_FALSE(family_for("lemma-c").has_value());
}
