#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace plottery {

/// Arbitrary-precision natural number.
using Natural = mpz_class;

/// Parses a non-negative decimal literal; throws plottery::Error otherwise.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& value);

/// Exact number of decimal digits (1 for zero).
std::size_t decimal_length(const Natural& value);

Natural pow10(std::size_t exponent);

}  // namespace plottery
