#ifndef FOURSQ_FPS_HPP
#define FOURSQ_FPS_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace foursq {

using Integer = mpz_class;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a series (or a factor of a product) has no inverse in Z[[q]].
class NotInvertibleError : public SeriesError {
public:
    using SeriesError::SeriesError;
};

// Raised when a coefficient at or beyond the truncation order is requested.
class TruncationError : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Formal power series in q over Z, known modulo q^order.
///
/// Values are immutable through the public interface. Binary operations
/// yield a series of order min(a.order(), b.order()).
class TruncatedSeries {
public:
    /// The zero series of the given order (order >= 1).
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of the coefficients; the order is coeffs.size() (>= 1).
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    /// c * q^power truncated at order (zero if power >= order).
    static TruncatedSeries monomial(const Integer &c, std::size_t power, std::size_t order);
    /// Coefficients given as small integers; order = list length.
    static TruncatedSeries from_ints(std::initializer_list<long> coeffs);

    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Throws TruncationError if i >= order().
    const Integer &coeff(std::size_t i) const;

    bool is_zero() const;
    /// Same series known to a lower order (order <= this->order()).
    TruncatedSeries truncated(std::size_t order) const;
    /// Copy with delta added to the coefficient of q^power. Fault injection hook.
    TruncatedSeries perturbed(std::size_t power, const Integer &delta) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Integer> coeffs_;
};

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries neg(const TruncatedSeries &a);
TruncatedSeries scale(const TruncatedSeries &a, const Integer &c);
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);
/// Multiplicative inverse; the constant term must be +1 or -1.
TruncatedSeries invert(const TruncatedSeries &a);
TruncatedSeries pow(const TruncatedSeries &a, unsigned long e);
/// q -> -q: negates the odd-index coefficients.
TruncatedSeries substitute_neg_q(const TruncatedSeries &a);
/// Multiplication by q^k (k >= 0), keeping the order.
TruncatedSeries shift_up(const TruncatedSeries &a, std::size_t k);

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries &a) { return neg(a); }
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return mul(a, b); }
inline TruncatedSeries operator*(const Integer &c, const TruncatedSeries &a) { return scale(a, c); }

/// Truncated expansion of (1 + sign*q^m)^e, for m >= 1, sign = +1 or -1, and any integer e.
TruncatedSeries expand_unit_factor(int sign, long m, long e, std::size_t order);

namespace detail {

// In-place multiplication of a coefficient buffer by (1 + sign*q^m)^e.
// These are the O(|e| * len) kernels behind h_series and the product builders.
void apply_unit_factor(std::vector<Integer> &buf, int sign, std::size_t m, long e);

} // namespace detail

/// prod_{j=1}^{n} (1+q^j)/(1-q^j); the empty product for n = 0 and the zero series for n < 0.
TruncatedSeries h_series(long n, std::size_t order);

/// sum_{k=-n}^{n} (-q)^{k^2}
TruncatedSeries theta_partial(long n, std::size_t order);

/// sum_{k in Z} q^{k^2}
TruncatedSeries theta_full(std::size_t order);

/// 1 + 8 sum_{k>=1} q^k / (1 + (-q)^k)^2
TruncatedSeries lambert_rhs(std::size_t order);

/// 1 + 8 sum_{k>=1} (-q)^k / (1 + q^k)^2
TruncatedSeries a_prime_lhs(std::size_t order);

/// A signed monomial (-1)^negative * q^exponent.
struct SignedMonomial {
    bool negative = false;
    long exponent = 1;

    /// (-q)^k
    static SignedMonomial neg_q_power(long k) { return {k % 2 != 0, k}; }
};

/// z/(1+z)^2 = sum_{r>=1} (-1)^{r+1} r z^r for z a signed monomial with exponent >= 1.
TruncatedSeries expand_z_over_1pz2(SignedMonomial z, std::size_t order);

/// sum_{k>=1} sum_{r>=1} (-1)^{(k+1)(r+1)} r q^{kr}
TruncatedSeries double_sum(std::size_t order);

/// Space-separated coefficients 0..order-1.
std::string to_coeff_string(const TruncatedSeries &s);
/// Human-readable polynomial form with an O(q^N) tail.
std::string to_string(const TruncatedSeries &s);
std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

} // namespace foursq

#endif
