#pragma once

#include <random>

namespace plottery::prob {

template <typename Engine>
bool draw_zero(Engine& engine, std::size_t n) {
  static constexpr std::uint64_t kChunk = 1'000'000'000'000'000'000ULL;  // 10^18
  bool zero = true;
  while (n > 0) {
    const std::size_t width = n < 18 ? n : 18;
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < width; ++i) bound *= 10;
    if (width == 18) bound = kChunk;
    std::uniform_int_distribution<std::uint64_t> digits(0, bound - 1);
    if (digits(engine) != 0) zero = false;
    n -= width;
  }
  return zero;
}

}  // namespace plottery::prob
