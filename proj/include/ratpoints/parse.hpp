#pragma once

#include <string_view>

#include "ratpoints/poly.hpp"

namespace ratpoints {

/// Parses signed integer-coefficient terms over x, y, z. `^` marks exponents,
/// `*` between factors is optional, whitespace is ignored. The result is
/// canonicalized. Throws ParseError with the offending character offset.
MultiPoly parse_polynomial(std::string_view text);

/// Same grammar, without canonicalization.
MultiPoly parse_polynomial_raw(std::string_view text);

}  // namespace ratpoints
