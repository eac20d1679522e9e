#include "plottery/natural.hpp"

#include <algorithm>

#include "plottery/errors.hpp"

namespace plottery {

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error("not a natural number: '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& value) { return value.get_str(10); }

std::size_t decimal_length(const Natural& value) {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t estimate = mpz_sizeinbase(value.get_mpz_t(), 10);
  if (estimate > 1 && value < pow10(estimate - 1)) {
    --estimate;
  }
  return estimate;
}

Natural pow10(std::size_t exponent) {
  Natural result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace plottery
