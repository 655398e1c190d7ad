#include <foursq/numthy.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace foursq {

namespace {

void require_positive(std::int64_t n, const char *what)
{
    if (n < 1) {
        throw std::domain_error(std::string(what) + " requires n >= 1, got " + std::to_string(n));
    }
}

} // namespace

std::vector<std::int64_t> r2_table(std::int64_t limit)
{
    std::vector<std::int64_t> r2(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0) + 1), 0);
    for (std::int64_t x = 0; x * x <= limit; ++x) {
        for (std::int64_t y = 0; x * x + y * y <= limit; ++y) {
            // (x, y) stands for its sign variants
            const std::int64_t mult = (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
            r2[static_cast<std::size_t>(x * x + y * y)] += mult;
        }
    }
    return r2;
}

std::vector<std::int64_t> r4_table(std::int64_t limit)
{
    const auto r2 = r2_table(limit);
    std::vector<std::int64_t> r4(r2.size(), 0);
    for (std::size_t a = 0; a < r2.size(); ++a) {
        if (r2[a] == 0) {
            continue;
        }
        for (std::size_t b = 0; a + b < r2.size(); ++b) {
            r4[a + b] += r2[a] * r2[b];
        }
    }
    return r4;
}

std::int64_t r4_enumerate(std::int64_t n)
{
    if (n < 0) {
        return 0;
    }
    return r4_table(n).back();
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    require_positive(n, "divisors");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t sigma(std::int64_t n)
{
    std::int64_t s = 0;
    for (auto d : divisors(n)) {
        s += d;
    }
    return s;
}

std::int64_t sigma_not4(std::int64_t n)
{
    require_positive(n, "sigma_not4");
    std::int64_t s = 0;
    for (auto d : divisors(n)) {
        if (d % 4 != 0) {
            s += d;
        }
    }
    return s;
}

std::int64_t weighted_divisor_sum(std::int64_t n)
{
    require_positive(n, "weighted_divisor_sum");
    std::int64_t s = 0;
    for (auto r : divisors(n)) {
        const bool odd_exponent = ((r + 1) * (n / r + 1)) % 2 != 0;
        s += odd_exponent ? -r : r;
    }
    return s;
}

DivisorProfile divisor_profile(std::int64_t n)
{
    require_positive(n, "divisor_profile");
    return {n, r4_enumerate(n), sigma_not4(n), weighted_divisor_sum(n)};
}

VerificationReport divisor_chain_check(std::int64_t n)
{
    require_positive(n, "divisor_chain_check");
    const auto ds = divisors(n);
    std::int64_t total = 0;
    std::int64_t both_even = 0;
    std::int64_t multiples_of_4 = 0;
    for (auto d : ds) {
        total += d;
        if (d % 2 == 0 && (n / d) % 2 == 0) {
            both_even += d;
        }
        if (d % 4 == 0) {
            multiples_of_4 += d;
        }
    }
    const std::int64_t target = sigma_not4(n);
    const std::pair<std::int64_t, const char *> members[] = {
        {weighted_divisor_sum(n), "weighted divisor sum"},
        {total - 2 * both_even, "sigma(n) - 2*sum{r|n, r and n/r even} r"},
        {total - multiples_of_4, "sigma(n) - sum{d|n, 4|d} d"},
    };
    VerificationReport r;
    r.subject = "divisor-chain";
    r.params = {{"n", n}};
    for (const auto &[value, label] : members) {
        if (value != target) {
            r.first_discrepancy = Discrepancy{n, target, value, label};
            break;
        }
    }
    return r;
}

VerificationReport jacobi_check(std::int64_t n_max, std::size_t order)
{
    if (n_max < 1) {
        throw std::domain_error("jacobi_check requires n_max >= 1");
    }
    if (order < static_cast<std::size_t>(n_max) + 1) {
        throw std::invalid_argument("jacobi_check requires order >= n_max + 1");
    }
    const TruncatedSeries theta4 = pow(theta_full(order), 4);
    const auto r4 = r4_table(n_max);
    VerificationReport r;
    r.subject = "jacobi";
    r.checked_order = order;
    r.params = {{"n_max", n_max}, {"N", static_cast<std::int64_t>(order)}};
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Integer count = r4[static_cast<std::size_t>(n)];
        const Integer &coeff = theta4.coeff(static_cast<std::size_t>(n));
        if (coeff != count) {
            r.first_discrepancy = Discrepancy{n, count, coeff, "theta^4 coefficient vs enumeration"};
            break;
        }
        const Integer eight_sigma = 8 * sigma_not4(n);
        if (count != eight_sigma) {
            r.first_discrepancy = Discrepancy{n, eight_sigma, count, "r4(n) vs 8*sigma_not4(n)"};
            break;
        }
    }
    return r;
}

VerificationReport jacobi_oracle_check(std::int64_t n_max)
{
    const auto r4 = r4_table(n_max);
    VerificationReport r;
    r.subject = "jacobi-oracle";
    r.params = {{"n_max", n_max}};
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const std::int64_t eight_sigma = 8 * sigma_not4(n);
        if (r4[static_cast<std::size_t>(n)] != eight_sigma) {
            r.first_discrepancy = Discrepancy{n, eight_sigma, r4[static_cast<std::size_t>(n)], "r4(n) vs 8*sigma_not4(n)"};
            break;
        }
    }
    return r;
}

} // namespace foursq
