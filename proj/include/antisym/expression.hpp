#pragma once

#include <string_view>

#include "antisym/hamel.hpp"

namespace antisym {

/// Parses `R*y(BITS) + R*y(BITS) + ...` or the literal `0`. R is `p`, `-p`,
/// `p/q` or `-p/q`; BITS is a canonical label, `y()` the empty one.
/// Whitespace is ignored everywhere. Repeated labels merge and zero
/// coefficients drop out. Throws ParseError with a byte offset.
HamelVector parse_expression(std::string_view text);

}  // namespace antisym
