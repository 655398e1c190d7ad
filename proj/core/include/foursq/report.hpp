#ifndef FOURSQ_REPORT_HPP
#define FOURSQ_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <foursq/fps.hpp>

namespace foursq {

struct Discrepancy {
    // Power of q (or the integer n for arithmetic checks) where the first mismatch occurs.
    std::int64_t power = 0;
    Integer expected;
    Integer got;
    // Free-form location, e.g. "k=-3" or a symbolic monomial.
    std::string where;
};

/// Outcome of one check. A report fails iff it carries a discrepancy.
struct VerificationReport {
    std::string subject;
    // 0 for exact symbolic checks, otherwise the truncation order compared.
    std::size_t checked_order = 0;
    std::optional<Discrepancy> first_discrepancy;
    std::map<std::string, std::int64_t> params;
    std::string note;

    bool passed() const noexcept { return !first_discrepancy.has_value(); }
};

/// Adds delta to the coefficient of q^power on the computed side of a check.
struct Perturbation {
    std::size_t power = 0;
    Integer delta = 1;
};

/// Coefficientwise comparison up to min(expected.order(), got.order()).
VerificationReport compare_series(std::string subject, const TruncatedSeries &expected, const TruncatedSeries &got,
                                  std::map<std::string, std::int64_t> params = {});

} // namespace foursq

#endif
