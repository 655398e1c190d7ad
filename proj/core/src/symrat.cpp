#include <foursq/symrat.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace foursq {

LaurentPoly::LaurentPoly(const Integer &c)
{
    if (sgn(c) != 0) {
        terms_.emplace(Exponents{0, 0, 0}, c);
    }
}

LaurentPoly LaurentPoly::monomial(const Integer &c, const Exponents &e)
{
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exponents &e, const Integer &c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Exponents LaurentPoly::min_exponents() const
{
    if (terms_.empty()) {
        return {0, 0, 0};
    }
    Exponents m{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max(),
                std::numeric_limits<std::int64_t>::max()};
    for (const auto &[e, c] : terms_) {
        for (std::size_t i = 0; i < 3; ++i) {
            m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents &s) const
{
    LaurentPoly out;
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), Exponents{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
    }
    return out;
}

Integer LaurentPoly::content() const
{
    Integer g = 0;
    for (const auto &[e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

LaurentPoly LaurentPoly::divexact(const Integer &d) const
{
    LaurentPoly out;
    for (const auto &[e, c] : terms_) {
        Integer r;
        mpz_divexact(r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.terms_.emplace_hint(out.terms_.end(), e, std::move(r));
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly out = a;
    for (const auto &[e, c] : b.terms()) {
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly &a)
{
    LaurentPoly out;
    for (const auto &[e, c] : a.terms()) {
        out.add_term(e, -c);
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly out = a;
    for (const auto &[e, c] : b.terms()) {
        out.add_term(e, -c);
    }
    return out;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    // Accumulate into a plain map and drop zeros once at the end.
    std::map<Exponents, Integer> acc;
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            Integer &slot = acc[Exponents{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    LaurentPoly out;
    for (auto &[e, c] : acc) {
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly pow(const LaurentPoly &a, unsigned long e)
{
    LaurentPoly result(1);
    LaurentPoly base = a;
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result = result * base;
        }
        e >>= 1;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

namespace {

void write_monomial(std::ostream &os, const Exponents &e)
{
    static constexpr char names[3] = {'q', 'X', 'Y'};
    bool first = true;
    for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!first) {
            os << '*';
        }
        first = false;
        os << names[i];
        if (e[i] != 1) {
            os << '^' << e[i];
        }
    }
}

} // namespace

std::string to_string(const LaurentPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        const bool constant = e == Exponents{0, 0, 0};
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (constant) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        write_monomial(os, e);
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p)
{
    return os << to_string(p);
}

LaurentPoly shift(const LaurentPoly &p, IndexShift which)
{
    LaurentPoly out;
    for (const auto &[e, c] : p.terms()) {
        Exponents s = e;
        switch (which) {
        case IndexShift::n_plus_1:
            s[0] += e[1];
            break;
        case IndexShift::k_minus_1:
            s[0] -= e[2];
            break;
        case IndexShift::k_plus_1:
            s[0] += e[2];
            break;
        }
        out.add_term(s, c);
    }
    return out;
}

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw SymbolicError("rational function with zero denominator");
    }
}

RationalFn RationalFn::canonical() const
{
    if (num_.is_zero()) {
        return RationalFn();
    }
    const Exponents mn = num_.min_exponents();
    const Exponents md = den_.min_exponents();
    const Exponents s{-std::min(mn[0], md[0]), -std::min(mn[1], md[1]), -std::min(mn[2], md[2])};
    LaurentPoly num = num_.shifted(s);
    LaurentPoly den = den_.shifted(s);
    Integer g = gcd(num.content(), den.content());
    if (g != 1) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    return RationalFn(std::move(num), std::move(den));
}

RationalFn operator+(const RationalFn &a, const RationalFn &b)
{
    if (a.den() == b.den()) {
        return RationalFn(a.num() + b.num(), a.den()).canonical();
    }
    return RationalFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()).canonical();
}

RationalFn operator-(const RationalFn &a)
{
    return RationalFn(-a.num(), a.den());
}

RationalFn operator-(const RationalFn &a, const RationalFn &b)
{
    return a + (-b);
}

RationalFn operator*(const RationalFn &a, const RationalFn &b)
{
    return RationalFn(a.num() * b.num(), a.den() * b.den()).canonical();
}

RationalFn operator/(const RationalFn &a, const RationalFn &b)
{
    if (b.is_zero()) {
        throw SymbolicError("division by the zero rational function");
    }
    return RationalFn(a.num() * b.den(), a.den() * b.num()).canonical();
}

RationalFn pow(const RationalFn &a, long e)
{
    if (e < 0) {
        if (a.is_zero()) {
            throw SymbolicError("negative power of the zero rational function");
        }
        const auto m = static_cast<unsigned long>(-e);
        return RationalFn(pow(a.den(), m), pow(a.num(), m)).canonical();
    }
    const auto m = static_cast<unsigned long>(e);
    return RationalFn(pow(a.num(), m), pow(a.den(), m)).canonical();
}

LaurentPoly cross_difference(const RationalFn &a, const RationalFn &b)
{
    return a.num() * b.den() - b.num() * a.den();
}

bool rat_equal(const RationalFn &a, const RationalFn &b)
{
    return cross_difference(a, b).is_zero();
}

RationalFn shift(const RationalFn &a, IndexShift which)
{
    return RationalFn(shift(a.num(), which), shift(a.den(), which));
}

std::string to_string(const RationalFn &r)
{
    if (r.den() == LaurentPoly(1)) {
        return to_string(r.num());
    }
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::ostream &operator<<(std::ostream &os, const RationalFn &r)
{
    return os << to_string(r);
}

QLaurent substitute(const LaurentPoly &p, std::int64_t n, std::int64_t k)
{
    QLaurent out;
    for (const auto &[e, c] : p.terms()) {
        const std::int64_t power = e[0] + n * e[1] + k * e[2];
        Integer &slot = out[power];
        slot += c;
        if (sgn(slot) == 0) {
            out.erase(power);
        }
    }
    return out;
}

SpecializedFn specialize_laurent(const RationalFn &a, std::int64_t n, std::int64_t k)
{
    return {substitute(a.num(), n, k), substitute(a.den(), n, k)};
}

TruncatedSeries specialize(const RationalFn &a, std::int64_t n, std::int64_t k, std::size_t order)
{
    const SpecializedFn s = specialize_laurent(a, n, k);
    const std::string where = " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
    if (s.den.empty()) {
        throw NotInvertibleError("denominator vanishes identically" + where);
    }
    const std::int64_t den_low = s.den.begin()->first;
    const Integer &lead = s.den.begin()->second;
    if (lead != 1 && lead != -1) {
        throw NotInvertibleError("denominator has non-unit leading coefficient " + lead.get_str() + where);
    }
    if (s.num.empty()) {
        return TruncatedSeries::zero(order);
    }
    const std::int64_t num_low = s.num.begin()->first;
    const std::int64_t offset = num_low - den_low;
    if (offset < 0) {
        throw NotInvertibleError("specialization has a pole of order " + std::to_string(-offset) + " at q=0" + where);
    }
    std::vector<Integer> num(order);
    std::vector<Integer> den(order);
    for (const auto &[e, c] : s.num) {
        const auto i = static_cast<std::size_t>(e - num_low);
        if (i < order) {
            num[i] = c;
        }
    }
    for (const auto &[e, c] : s.den) {
        const auto i = static_cast<std::size_t>(e - den_low);
        if (i < order) {
            den[i] = c;
        }
    }
    const TruncatedSeries quotient = mul(TruncatedSeries(std::move(num)), invert(TruncatedSeries(std::move(den))));
    return shift_up(quotient, static_cast<std::size_t>(offset));
}

} // namespace foursq
