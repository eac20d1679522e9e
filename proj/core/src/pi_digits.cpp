#include "plottery/pi/digits.hpp"

#include <algorithm>

#include "plottery/errors.hpp"
#include "plottery/pi/compute.hpp"

#include <zlib.h>

namespace plottery::pi {

DigitGroup::DigitGroup(std::string digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw Error("digit group must be nonempty");
  if (!std::all_of(digits_.begin(), digits_.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error("digit group '" + digits_ + "' contains a non-digit");
  }
}

Natural DigitGroup::value() const { return Natural(digits_, 10); }

DigitGroup t_k(const DigitGroup& group, const Natural& k) {
  const Natural modulus = pow10(group.width());
  Natural sum = (group.value() + k) % modulus;
  std::string text = sum.get_str();
  return DigitGroup(std::string(group.width() - text.size(), '0') + text);
}

DigitGroup group(const DigitSource& source, const Natural& m, std::size_t n) {
  if (m < 1 || n == 0) throw Error("digit groups need m >= 1 and n >= 1");
  return DigitGroup(source.digits(m, n));
}

namespace {

std::string position_text(const Natural& position) {
  const std::size_t length = decimal_length(position);
  if (length <= 24) return position.get_str();
  return "a " + std::to_string(length) + "-digit position";
}

}  // namespace

DigitCache::DigitCache(std::string digits) : digits_(std::move(digits)) {
  if (!std::all_of(digits_.begin(), digits_.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error("digit cache contains a non-digit");
  }
  static constexpr std::string_view kPrefix = "14159";
  const std::size_t checked = std::min(digits_.size(), kPrefix.size());
  if (digits_.compare(0, checked, kPrefix.substr(0, checked)) != 0) {
    throw Error("digit cache does not start with the decimals of pi");
  }
  const std::string packed = pack_digits(digits_);
  checksum_ = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(packed.data()), static_cast<uInt>(packed.size())));
}

std::string DigitCache::digits(const Natural& m, std::size_t n) const {
  if (m < 1 || n == 0) throw Error("digit ranges need m >= 1 and n >= 1");
  const Natural last = m + (n - 1);
  if (last > digits_.size()) throw CacheExhausted(position_text(last), digits_.size());
  return digits_.substr(m.get_ui() - 1, n);
}

Natural champernowne_prefix(std::size_t d) {
  if (d == 0) return 0;
  return (Natural(9 * d - 1) * pow10(d) + 1) / 9;
}

std::string ChampernowneDigits::digits(const Natural& m, std::size_t n) const {
  if (m < 1 || n == 0) throw Error("digit ranges need m >= 1 and n >= 1");
  // Block d holds the d-digit numbers; find the d with prefix(d-1) < m <= prefix(d).
  const std::size_t length = decimal_length(m);
  std::size_t d = std::max<std::size_t>(1, length - std::min(length - 1, decimal_length(length)));
  while (champernowne_prefix(d) < m) ++d;
  while (d > 1 && champernowne_prefix(d - 1) >= m) --d;
  const Natural offset = m - champernowne_prefix(d - 1) - 1;
  Natural number = pow10(d - 1) + offset / d;
  const Natural skip = offset % d;
  std::string out = number.get_str().substr(skip.get_ui());
  while (out.size() < n) {
    ++number;
    out += number.get_str();
  }
  out.resize(n);
  return out;
}

}  // namespace plottery::pi
