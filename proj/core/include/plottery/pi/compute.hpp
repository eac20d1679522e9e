#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "plottery/pi/digits.hpp"

namespace plottery::pi {

enum class Algorithm {
  kSpigot,  // Rabinowitz-Wagon, 64-bit words, quadratic
  kSeries,  // Chudnovsky by binary splitting
  kMachin,  // 16·atan(1/5) - 4·atan(1/239) in fixed point
};

std::string_view algorithm_name(Algorithm algorithm);
/// "spigot", "series" or "machin"; throws plottery::Error otherwise.
Algorithm parse_algorithm(std::string_view name);

struct BuildBudget {
  std::size_t max_digits = 100'000'000;
  std::optional<std::chrono::steady_clock::duration> time_limit;
};

/// The first n decimals of π after the point.
std::string spigot_digits(std::size_t n, const BuildBudget& budget = {});
std::string series_digits(std::size_t n, const BuildBudget& budget = {});
std::string machin_digits(std::size_t n, const BuildBudget& budget = {});

/// Throws ResourceBudgetExceeded (no partial cache) if n or the elapsed
/// time exceeds the budget.
DigitCache build_cache(std::size_t n, Algorithm algorithm, const BuildBudget& budget = {});

/// Layout: "PIDC", u16 version, u64 N, N digits packed two per byte (high
/// nibble first, odd N padded with 0xF), u32 CRC-32 of the payload. All
/// integers little-endian.
inline constexpr std::uint16_t kCacheVersion = 1;
void write_cache(std::ostream& out, const DigitCache& cache);
DigitCache read_cache(std::istream& in);
void write_cache_file(const std::filesystem::path& path, const DigitCache& cache);
DigitCache read_cache_file(const std::filesystem::path& path);

/// Payload bytes as stored in the file.
std::string pack_digits(std::string_view digits);

}  // namespace plottery::pi
