#include <foursq/report.hpp>

#include <algorithm>

namespace foursq {

VerificationReport compare_series(std::string subject, const TruncatedSeries &expected, const TruncatedSeries &got,
                                  std::map<std::string, std::int64_t> params)
{
    VerificationReport r;
    r.subject = std::move(subject);
    r.params = std::move(params);
    r.checked_order = std::min(expected.order(), got.order());
    for (std::size_t i = 0; i < r.checked_order; ++i) {
        if (expected.coeffs()[i] != got.coeffs()[i]) {
            r.first_discrepancy = Discrepancy{static_cast<std::int64_t>(i), expected.coeffs()[i], got.coeffs()[i], {}};
            break;
        }
    }
    return r;
}

} // namespace foursq
