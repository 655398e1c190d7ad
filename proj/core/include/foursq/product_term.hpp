#ifndef FOURSQ_PRODUCT_TERM_HPP
#define FOURSQ_PRODUCT_TERM_HPP

#include <cstdint>
#include <map>
#include <utility>

#include <gmpxx.h>

#include <foursq/fps.hpp>

namespace foursq {

/// c * q^s * prod (1 + sign*q^m)^e with rational c, integer s and m >= 1.
///
/// This is the closed form of every summand and certificate term used by the
/// verifier. Factors (1 + sign*q^m) with m <= 0 are normalized on construction,
/// so (1+q^0) becomes the constant 2 and (1 + q^-m) becomes q^-m (1 + q^m).
class ProductTerm {
public:
    ProductTerm() = default; // 1

    static ProductTerm zero();
    static ProductTerm constant(const mpq_class &c);
    static ProductTerm q_power(std::int64_t e);
    /// (1 + sign*q^m)^e for any integer m. Throws NotInvertibleError for (1 - q^0)^e with e < 0.
    static ProductTerm binomial(int sign, std::int64_t m, std::int64_t e);
    /// prod_{j=1}^{m} (1+q^j)/(1-q^j), and zero for m < 0.
    static ProductTerm h(std::int64_t m);

    bool is_zero() const noexcept { return zero_; }

    ProductTerm operator*(const ProductTerm &o) const;
    /// Throws NotInvertibleError for the zero term.
    ProductTerm inverse() const;
    ProductTerm pow(std::int64_t e) const;

    /// Expansion modulo q^order. Throws SeriesError if the term has a pole at
    /// q = 0 or its coefficients are not integers.
    TruncatedSeries to_series(std::size_t order) const;

private:
    bool zero_ = false;
    mpq_class constant_ = 1;
    std::int64_t q_shift_ = 0;
    // (sign, m) -> exponent, m >= 1, no zero exponents stored
    std::map<std::pair<int, std::int64_t>, std::int64_t> factors_;
};

} // namespace foursq

#endif
