#include <foursq/fps.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace foursq {

namespace {

std::size_t min_order(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return std::min(a.order(), b.order());
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order)
{
    if (order == 0) {
        throw std::invalid_argument("truncation order must be positive");
    }
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("truncation order must be positive");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Integer &c, std::size_t power, std::size_t order)
{
    TruncatedSeries s(order);
    if (power < order) {
        s.coeffs_[power] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_ints(std::initializer_list<long> coeffs)
{
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return TruncatedSeries(std::move(v));
}

const Integer &TruncatedSeries::coeff(std::size_t i) const
{
    if (i >= coeffs_.size()) {
        throw TruncationError("coefficient of q^" + std::to_string(i) + " requested from a series known only modulo q^"
                              + std::to_string(coeffs_.size()));
    }
    return coeffs_[i];
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > coeffs_.size()) {
        throw TruncationError("cannot raise truncation order from " + std::to_string(coeffs_.size()) + " to "
                              + std::to_string(order));
    }
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

TruncatedSeries TruncatedSeries::perturbed(std::size_t power, const Integer &delta) const
{
    if (power >= order()) {
        throw TruncationError("cannot perturb q^" + std::to_string(power) + " of a series known modulo q^"
                              + std::to_string(order()));
    }
    TruncatedSeries s = *this;
    s.coeffs_[power] += delta;
    return s;
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t n = min_order(a, b);
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a.coeffs()[i] + b.coeffs()[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t n = min_order(a, b);
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a.coeffs()[i] - b.coeffs()[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries neg(const TruncatedSeries &a)
{
    std::vector<Integer> out(a.order());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = -a.coeffs()[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const TruncatedSeries &a, const Integer &c)
{
    std::vector<Integer> out(a.order());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeffs()[i] * c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t n = min_order(a, b);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Integer> out(n);
    // Theta-type inputs are very sparse; skip zero rows.
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(ac[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (sgn(bc[j]) != 0) {
                mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
            }
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries invert(const TruncatedSeries &a)
{
    const auto ac = a.coeffs();
    const int c0 = sgn(ac[0]) == 0 ? 0 : (ac[0] == 1 ? 1 : (ac[0] == -1 ? -1 : 0));
    if (c0 == 0) {
        throw NotInvertibleError("series is not invertible over Z: constant term " + ac[0].get_str()
                                 + " is not a unit");
    }
    const std::size_t n = a.order();
    std::vector<Integer> out(n);
    out[0] = c0;
    Integer acc;
    for (std::size_t i = 1; i < n; ++i) {
        acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (sgn(ac[j]) != 0) {
                mpz_addmul(acc.get_mpz_t(), ac[j].get_mpz_t(), out[i - j].get_mpz_t());
            }
        }
        // a0 * out[i] = -acc and a0 = 1/a0
        out[i] = c0 == 1 ? Integer(-acc) : acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries pow(const TruncatedSeries &a, unsigned long e)
{
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries substitute_neg_q(const TruncatedSeries &a)
{
    std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 1; i < out.size(); i += 2) {
        out[i] = -out[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries &a, std::size_t k)
{
    std::vector<Integer> out(a.order());
    for (std::size_t i = k; i < out.size(); ++i) {
        out[i] = a.coeffs()[i - k];
    }
    return TruncatedSeries(std::move(out));
}

namespace detail {

void apply_unit_factor(std::vector<Integer> &buf, int sign, std::size_t m, long e)
{
    if (m == 0) {
        throw std::invalid_argument("unit factor requires a positive exponent of q");
    }
    const std::size_t len = buf.size();
    if (m >= len || e == 0) {
        return;
    }
    for (long rep = 0; rep < std::labs(e); ++rep) {
        if (e > 0) {
            // times (1 + s q^m): high to low so each source is read before it is updated
            for (std::size_t i = len - 1; i >= m; --i) {
                if (sign > 0) {
                    buf[i] += buf[i - m];
                } else {
                    buf[i] -= buf[i - m];
                }
            }
        } else {
            // divided by (1 + s q^m): low to high
            for (std::size_t i = m; i < len; ++i) {
                if (sign > 0) {
                    buf[i] -= buf[i - m];
                } else {
                    buf[i] += buf[i - m];
                }
            }
        }
    }
}

} // namespace detail

TruncatedSeries expand_unit_factor(int sign, long m, long e, std::size_t order)
{
    if (m < 1) {
        throw std::invalid_argument("expand_unit_factor: m must be >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("expand_unit_factor: sign must be +1 or -1");
    }
    // Generalized binomial series: C(e, j) (sign)^j q^{mj}.
    std::vector<Integer> out(order);
    Integer c = 1;
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t j = 0; j * step < order; ++j) {
        out[j * step] = (sign < 0 && j % 2 == 1) ? Integer(-c) : c;
        c *= e - static_cast<long>(j);
        if (sgn(c) == 0) {
            break;
        }
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries h_series(long n, std::size_t order)
{
    TruncatedSeries s(order);
    if (n < 0) {
        return s;
    }
    std::vector<Integer> buf(order);
    buf[0] = 1;
    for (long j = 1; j <= n && static_cast<std::size_t>(j) < order; ++j) {
        detail::apply_unit_factor(buf, +1, static_cast<std::size_t>(j), 1);
        detail::apply_unit_factor(buf, -1, static_cast<std::size_t>(j), -1);
    }
    return TruncatedSeries(std::move(buf));
}

TruncatedSeries theta_partial(long n, std::size_t order)
{
    std::vector<Integer> out(order);
    out[0] = 1;
    for (long k = 1; k <= n; ++k) {
        const auto sq = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
        if (sq >= order) {
            break;
        }
        out[sq] = (k % 2 != 0) ? -2 : 2;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries theta_full(std::size_t order)
{
    std::vector<Integer> out(order);
    out[0] = 1;
    for (std::size_t k = 1; k * k < order; ++k) {
        out[k * k] = 2;
    }
    return TruncatedSeries(std::move(out));
}

namespace {

// 1 + 8 sum_{k>=1} numsign(k) q^k (1 + densign(k) q^k)^{-2}
template <typename NumSign, typename DenSign>
TruncatedSeries lambert_type(std::size_t order, NumSign numsign, DenSign densign)
{
    std::vector<Integer> out(order);
    out[0] = 1;
    for (std::size_t k = 1; k < order; ++k) {
        const int s = densign(k);
        const int ns = numsign(k);
        // (1 + s x)^{-2} = sum_j (j+1) (-s)^j x^j
        for (std::size_t j = 0; k + j * k < order; ++j) {
            long term = 8L * static_cast<long>(j + 1) * ns;
            if (s > 0 && j % 2 == 1) {
                term = -term;
            }
            out[k + j * k] += term;
        }
    }
    return TruncatedSeries(std::move(out));
}

} // namespace

TruncatedSeries lambert_rhs(std::size_t order)
{
    return lambert_type(
        order, [](std::size_t) { return 1; }, [](std::size_t k) { return k % 2 == 0 ? 1 : -1; });
}

TruncatedSeries a_prime_lhs(std::size_t order)
{
    return lambert_type(
        order, [](std::size_t k) { return k % 2 == 0 ? 1 : -1; }, [](std::size_t) { return 1; });
}

TruncatedSeries expand_z_over_1pz2(SignedMonomial z, std::size_t order)
{
    if (z.exponent < 1) {
        throw std::invalid_argument("expand_z_over_1pz2: exponent must be >= 1");
    }
    std::vector<Integer> out(order);
    const auto m = static_cast<std::size_t>(z.exponent);
    for (std::size_t r = 1; r * m < order; ++r) {
        // (-1)^{r+1} r z^r, z^r = (-1)^{r*negative} q^{rm}
        bool negative = (r + 1) % 2 == 1;
        if (z.negative && r % 2 == 1) {
            negative = !negative;
        }
        const long v = static_cast<long>(r);
        out[r * m] = negative ? -v : v;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries double_sum(std::size_t order)
{
    std::vector<Integer> out(order);
    for (std::size_t k = 1; k < order; ++k) {
        for (std::size_t r = 1; k * r < order; ++r) {
            const bool negative = ((k + 1) * (r + 1)) % 2 == 1;
            const long v = static_cast<long>(r);
            out[k * r] += negative ? -v : v;
        }
    }
    return TruncatedSeries(std::move(out));
}

std::string to_coeff_string(const TruncatedSeries &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += s.coeffs()[i].get_str();
    }
    return out;
}

std::string to_string(const TruncatedSeries &s)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < s.order(); ++i) {
        const Integer &c = s.coeffs()[i];
        if (sgn(c) == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << 'q';
        if (i != 1) {
            os << '^' << i;
        }
    }
    if (first) {
        os << '0';
    }
    os << " + O(q^" << s.order() << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    return os << to_string(s);
}

} // namespace foursq
