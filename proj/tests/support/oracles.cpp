#include "oracles.hpp"

namespace foursq::oracle {

Poly mul(const Poly &a, const Poly &b, std::size_t len)
{
    Poly out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::int64_t r4_brute(std::int64_t n)
{
    std::int64_t s = 0;
    while ((s + 1) * (s + 1) <= n) {
        ++s;
    }
    std::int64_t count = 0;
    for (std::int64_t a = -s; a <= s; ++a) {
        for (std::int64_t b = -s; b <= s; ++b) {
            for (std::int64_t c = -s; c <= s; ++c) {
                for (std::int64_t d = -s; d <= s; ++d) {
                    if (a * a + b * b + c * c + d * d == n) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

std::vector<std::int64_t> divisors_brute(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

std::int64_t sigma_not4_brute(std::int64_t n)
{
    std::int64_t s = 0;
    for (auto d : divisors_brute(n)) {
        if (d % 4 != 0) {
            s += d;
        }
    }
    return s;
}

Poly product_of_binomials(int sign, std::int64_t n, std::size_t len)
{
    Poly acc(len);
    acc[0] = 1;
    for (std::int64_t j = 1; j <= n; ++j) {
        Poly factor(len);
        factor[0] = 1;
        if (static_cast<std::size_t>(j) < len) {
            factor[static_cast<std::size_t>(j)] = sign;
        }
        acc = mul(acc, factor, len);
    }
    return acc;
}

Poly negative_binomial(int sign, std::int64_t m, std::int64_t e, std::size_t len)
{
    // (1 + s x)^{-t} = sum_j C(t+j-1, j) (-s)^j x^j
    const auto t = static_cast<unsigned long>(-e);
    Poly out(len);
    for (std::size_t j = 0; j * static_cast<std::size_t>(m) < len; ++j) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), t + j - 1, j);
        if (sign > 0 && j % 2 == 1) {
            c = -c;
        }
        out[j * static_cast<std::size_t>(m)] = c;
    }
    return out;
}

Poly double_sum_pairs(std::size_t len)
{
    Poly out(len);
    for (std::size_t p = 1; p < len; ++p) {
        for (std::size_t k = 1; k <= p; ++k) {
            if (p % k != 0) {
                continue;
            }
            const std::size_t r = p / k;
            const bool negative = ((k + 1) * (r + 1)) % 2 == 1;
            out[p] += negative ? -static_cast<long>(r) : static_cast<long>(r);
        }
    }
    return out;
}

} // namespace foursq::oracle
