#ifndef FOURSQ_SYMRAT_HPP
#define FOURSQ_SYMRAT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <foursq/fps.hpp>

namespace foursq {

// Exponents of q, X and Y, in that order. X stands for q^n and Y for q^k.
using Exponents = std::array<std::int64_t, 3>;

inline constexpr Exponents exp_q{1, 0, 0};
inline constexpr Exponents exp_X{0, 1, 0};
inline constexpr Exponents exp_Y{0, 0, 1};

class SymbolicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial in q, X, Y with integer coefficients.
///
/// Terms are kept in a std::map keyed by the exponent triple, so iteration
/// order is canonical and no zero coefficient is ever stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Integer>;

    LaurentPoly() = default;
    /// The constant polynomial c.
    LaurentPoly(const Integer &c); // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Integer(c)) {} // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Integer &c, const Exponents &e);
    static LaurentPoly q() { return monomial(1, exp_q); }
    static LaurentPoly X() { return monomial(1, exp_X); }
    static LaurentPoly Y() { return monomial(1, exp_Y); }

    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * monomial(e); drops the term if it cancels.
    void add_term(const Exponents &e, const Integer &c);

    /// Componentwise minimum of exponents (all zeros for the zero polynomial).
    Exponents min_exponents() const;
    /// Multiplies by the monomial q^e[0] X^e[1] Y^e[2].
    LaurentPoly shifted(const Exponents &e) const;
    /// gcd of the absolute values of all coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divides every coefficient exactly by d.
    LaurentPoly divexact(const Integer &d) const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    TermMap terms_;
};

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator-(const LaurentPoly &a);
LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly pow(const LaurentPoly &a, unsigned long e);

std::string to_string(const LaurentPoly &p);
std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

// Shifts of the summation indices, realized as substitutions on X and Y.
enum class IndexShift {
    n_plus_1,  // X -> qX
    k_minus_1, // Y -> Y/q
    k_plus_1,  // Y -> qY
};

LaurentPoly shift(const LaurentPoly &p, IndexShift which);

/// Quotient num/den of Laurent polynomials.
///
/// No gcd reduction is performed; equality is decided by cross-multiplication.
class RationalFn {
public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(LaurentPoly num); // NOLINT(google-explicit-constructor)
    /// Throws SymbolicError if den is the zero polynomial.
    RationalFn(LaurentPoly num, LaurentPoly den);

    const LaurentPoly &num() const noexcept { return num_; }
    const LaurentPoly &den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Same function with both parts multiplied by a common monomial so that
    /// every exponent is >= 0 and the smallest exponent of each variable is 0,
    /// and with the common integer content divided out.
    RationalFn canonical() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

RationalFn operator+(const RationalFn &a, const RationalFn &b);
RationalFn operator-(const RationalFn &a, const RationalFn &b);
RationalFn operator-(const RationalFn &a);
RationalFn operator*(const RationalFn &a, const RationalFn &b);
/// Throws SymbolicError when b is the zero function.
RationalFn operator/(const RationalFn &a, const RationalFn &b);
/// Negative exponents invert; throws SymbolicError for a zero base with e < 0.
RationalFn pow(const RationalFn &a, long e);

/// num_a*den_b - num_b*den_a
LaurentPoly cross_difference(const RationalFn &a, const RationalFn &b);
bool rat_equal(const RationalFn &a, const RationalFn &b);

RationalFn shift(const RationalFn &a, IndexShift which);

std::string to_string(const RationalFn &r);
std::ostream &operator<<(std::ostream &os, const RationalFn &r);

/// Laurent polynomial in q alone, as produced by substituting X = q^n, Y = q^k.
using QLaurent = std::map<std::int64_t, Integer>;

QLaurent substitute(const LaurentPoly &p, std::int64_t n, std::int64_t k);

/// The specialization as a pair of q-Laurent polynomials (numerator, denominator).
struct SpecializedFn {
    QLaurent num;
    QLaurent den;
};

SpecializedFn specialize_laurent(const RationalFn &a, std::int64_t n, std::int64_t k);

/// Evaluates a at X = q^n, Y = q^k as a truncated series.
///
/// After clearing the lowest power of q from the denominator, its constant
/// term must be +1 or -1 and the remaining power of q must be >= 0;
/// otherwise NotInvertibleError is thrown.
TruncatedSeries specialize(const RationalFn &a, std::int64_t n, std::int64_t k, std::size_t order);

} // namespace foursq

#endif
