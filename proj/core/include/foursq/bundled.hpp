#ifndef FOURSQ_BUNDLED_HPP
#define FOURSQ_BUNDLED_HPP

#include <string_view>

namespace foursq {

/// Contents of data/jacobi.cert, compiled into the library.
std::string_view bundled_certificate_text();

} // namespace foursq

#endif
