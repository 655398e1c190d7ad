#ifndef FOURSQ_NUMTHY_HPP
#define FOURSQ_NUMTHY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <foursq/report.hpp>

namespace foursq {

struct DivisorProfile {
    std::int64_t n = 0;
    std::int64_t r4 = 0;
    std::int64_t sigma_not4 = 0;
    std::int64_t weighted = 0;
};

/// r2(a) for 0 <= a <= limit, by enumerating lattice points x^2 + y^2 <= limit.
std::vector<std::int64_t> r2_table(std::int64_t limit);
/// r4(a) for 0 <= a <= limit as the self-convolution of r2_table(limit).
std::vector<std::int64_t> r4_table(std::int64_t limit);
/// Number of (x1, x2, x3, x4) in Z^4 with x1^2 + x2^2 + x3^2 + x4^2 = n.
std::int64_t r4_enumerate(std::int64_t n);

/// Divisors of n >= 1 in increasing order, by trial division up to sqrt(n).
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t sigma(std::int64_t n);
/// Sum of the divisors of n that are not multiples of 4. Throws std::domain_error for n < 1.
std::int64_t sigma_not4(std::int64_t n);
/// sum_{r | n} (-1)^{(r+1)(n/r+1)} r. Throws std::domain_error for n < 1.
std::int64_t weighted_divisor_sum(std::int64_t n);

DivisorProfile divisor_profile(std::int64_t n);

/// sigma(n) - 2 sum_{r|n, r and n/r even} r = sigma(n) - sum_{d|n, 4|d} d = sigma_not4(n) = weighted_divisor_sum(n).
VerificationReport divisor_chain_check(std::int64_t n);

/// For 1 <= n <= n_max: coefficient n of theta_full(order)^4 equals r4_enumerate(n),
/// and r4_enumerate(n) equals 8 sigma_not4(n). Requires order >= n_max + 1.
VerificationReport jacobi_check(std::int64_t n_max, std::size_t order);

/// r4(n) == 8 sigma_not4(n) for 1 <= n <= n_max, without the series side.
VerificationReport jacobi_oracle_check(std::int64_t n_max);

} // namespace foursq

#endif
