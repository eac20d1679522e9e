#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "plottery/natural.hpp"

namespace plottery::pi {

/// A width-n decimal string; leading zeros are part of the value.
class DigitGroup {
 public:
  /// Throws plottery::Error unless `digits` is a nonempty run of 0-9.
  explicit DigitGroup(std::string digits);

  const std::string& text() const { return digits_; }
  std::size_t width() const { return digits_.size(); }
  Natural value() const;

  bool operator==(const DigitGroup&) const = default;

 private:
  std::string digits_;
};

/// (value(group) + k) mod 10^n, zero-padded to the same width n.
DigitGroup t_k(const DigitGroup& group, const Natural& k);

/// Random access to the decimals of some real number, 1-indexed after the
/// decimal point.
class DigitSource {
 public:
  virtual ~DigitSource() = default;

  /// Digits m..m+n-1. Throws CacheExhausted if the source cannot serve them.
  virtual std::string digits(const Natural& m, std::size_t n) const = 0;
  virtual std::string_view name() const = 0;
};

/// digits(m, n) as a DigitGroup; m and n must be positive.
DigitGroup group(const DigitSource& source, const Natural& m, std::size_t n);

/// The first N decimals of π, immutable once built.
class DigitCache final : public DigitSource {
 public:
  /// Throws plottery::Error on non-digits or a prefix other than 14159.
  explicit DigitCache(std::string digits);

  std::size_t size() const { return digits_.size(); }
  const std::string& text() const { return digits_; }
  /// CRC-32 of the packed payload (see write_cache).
  std::uint32_t checksum() const { return checksum_; }

  std::string digits(const Natural& m, std::size_t n) const override;
  std::string_view name() const override { return "pi"; }

 private:
  std::string digits_;
  std::uint32_t checksum_;
};

/// π[m]₍ₙ₎.
inline DigitGroup pi_group(const Natural& m, std::size_t n, const DigitCache& cache) {
  return group(cache, m, n);
}

/// 0.123456789101112...: every position has a closed form, so arbitrarily
/// large placements are served without a cache.
class ChampernowneDigits final : public DigitSource {
 public:
  std::string digits(const Natural& m, std::size_t n) const override;
  std::string_view name() const override { return "champernowne"; }
};

/// Number of digits in 1 2 ... (10^d - 1), i.e. ((9d-1)·10^d + 1)/9.
Natural champernowne_prefix(std::size_t d);

}  // namespace plottery::pi
