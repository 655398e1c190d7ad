#include <foursq/product_term.hpp>

#include <string>

namespace foursq {

namespace {

mpq_class pow_q(mpq_class base, std::int64_t e)
{
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    mpq_class r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

} // namespace

ProductTerm ProductTerm::zero()
{
    ProductTerm t;
    t.zero_ = true;
    t.constant_ = 0;
    return t;
}

ProductTerm ProductTerm::constant(const mpq_class &c)
{
    if (sgn(c) == 0) {
        return zero();
    }
    ProductTerm t;
    t.constant_ = c;
    t.constant_.canonicalize();
    return t;
}

ProductTerm ProductTerm::q_power(std::int64_t e)
{
    ProductTerm t;
    t.q_shift_ = e;
    return t;
}

ProductTerm ProductTerm::binomial(int sign, std::int64_t m, std::int64_t e)
{
    if (e == 0) {
        return {};
    }
    if (m == 0) {
        if (sign > 0) {
            return constant(pow_q(2, e));
        }
        if (e > 0) {
            return zero();
        }
        throw NotInvertibleError("factor (1 - q^0) vanishes and appears with exponent " + std::to_string(e));
    }
    ProductTerm t;
    if (m < 0) {
        // 1 + s q^m = s q^m (1 + s q^-m) since s^2 = 1
        if (sign < 0 && e % 2 != 0) {
            t.constant_ = -1;
        }
        t.q_shift_ = m * e;
        m = -m;
    }
    t.factors_[{sign > 0 ? 1 : -1, m}] = e;
    return t;
}

ProductTerm ProductTerm::h(std::int64_t m)
{
    if (m < 0) {
        return zero();
    }
    ProductTerm t;
    for (std::int64_t j = 1; j <= m; ++j) {
        t.factors_[{1, j}] = 1;
        t.factors_[{-1, j}] = -1;
    }
    return t;
}

ProductTerm ProductTerm::operator*(const ProductTerm &o) const
{
    if (zero_ || o.zero_) {
        return zero();
    }
    ProductTerm t = *this;
    t.constant_ *= o.constant_;
    t.q_shift_ += o.q_shift_;
    for (const auto &[key, e] : o.factors_) {
        auto it = t.factors_.find(key);
        if (it == t.factors_.end()) {
            t.factors_.emplace(key, e);
        } else if ((it->second += e) == 0) {
            t.factors_.erase(it);
        }
    }
    return t;
}

ProductTerm ProductTerm::inverse() const
{
    if (zero_) {
        throw NotInvertibleError("inverse of a vanishing product term");
    }
    ProductTerm t;
    t.constant_ = 1 / constant_;
    t.q_shift_ = -q_shift_;
    for (const auto &[key, e] : factors_) {
        t.factors_.emplace(key, -e);
    }
    return t;
}

ProductTerm ProductTerm::pow(std::int64_t e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (zero_) {
        return e == 0 ? ProductTerm() : zero();
    }
    ProductTerm t;
    t.constant_ = pow_q(constant_, e);
    t.q_shift_ = q_shift_ * e;
    for (const auto &[key, f] : factors_) {
        t.factors_.emplace(key, f * e);
    }
    return t;
}

TruncatedSeries ProductTerm::to_series(std::size_t order) const
{
    if (zero_) {
        return TruncatedSeries::zero(order);
    }
    if (q_shift_ < 0) {
        throw SeriesError("product term has a pole of order " + std::to_string(-q_shift_) + " at q = 0");
    }
    const auto shift = static_cast<std::size_t>(q_shift_);
    if (shift >= order) {
        return TruncatedSeries::zero(order);
    }
    std::vector<Integer> buf(order - shift);
    buf[0] = 1;
    for (const auto &[key, e] : factors_) {
        detail::apply_unit_factor(buf, key.first, static_cast<std::size_t>(key.second), static_cast<long>(e));
    }
    const Integer &num = constant_.get_num();
    const Integer &den = constant_.get_den();
    std::vector<Integer> out(order);
    for (std::size_t i = 0; i < buf.size(); ++i) {
        Integer v = buf[i] * num;
        if (den != 1) {
            if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) {
                throw SeriesError("product term has a non-integral coefficient at q^" + std::to_string(i + shift));
            }
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
        }
        out[i + shift] = std::move(v);
    }
    return TruncatedSeries(std::move(out));
}

} // namespace foursq
