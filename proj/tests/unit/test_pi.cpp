#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "plottery/errors.hpp"
#include "plottery/pi/compute.hpp"
#include "plottery/pi/digits.hpp"
#include "support.hpp"

namespace plottery::pi {
namespace {

using Big = boost::multiprecision::cpp_int;

// Boost computes its own π; the first 1000 decimals serve as the oracle.
const std::string& oracle_digits() {
  static const std::string digits = [] {
    using Float = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<1100>>;
    const std::string s = boost::math::constants::pi<Float>().str(1050, std::ios_base::fixed);
    return s.substr(2, 1000);
  }();
  return digits;
}

const DigitCache& shipped() {
  static const DigitCache cache = read_cache_file(testing::data_path("pi-1000.pidc"));
  return cache;
}

TEST(PiGroup, PublishedValues) {
  EXPECT_EQ(pi_group(5, 3, shipped()).text(), "926");
  EXPECT_EQ(pi_group(1, 2, shipped()).text(), "14");
  EXPECT_EQ(pi_group(36, 2, shipped()).text(), "41");
  EXPECT_EQ(pi_group(401, 2, shipped()).text(), "33");
}

TEST(PiGroup, ShippedCacheMatchesOracle) {
  ASSERT_EQ(shipped().size(), 1000u);
  EXPECT_EQ(shipped().text(), oracle_digits());
}

TEST(PiGroup, ConcatenationIsConsistent) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t m = 1 + rng() % 900;
    const std::size_t a = 1 + rng() % 40;
    const std::size_t b = 1 + rng() % 40;
    const std::string joined = pi_group(m, a, shipped()).text() + pi_group(m + a, b, shipped()).text();
    ASSERT_EQ(pi_group(m, a + b, shipped()).text(), joined);
    ASSERT_EQ(joined, oracle_digits().substr(m - 1, a + b));
  }
}

TEST(PiGroup, ExhaustionAndBadArguments) {
  EXPECT_NO_THROW(pi_group(998, 3, shipped()));
  EXPECT_THROW(pi_group(999, 3, shipped()), CacheExhausted);
  EXPECT_THROW(pi_group(Natural("100000000000000000000"), 1, shipped()), CacheExhausted);
  EXPECT_THROW(pi_group(0, 3, shipped()), Error);
  EXPECT_THROW(pi_group(1, 0, shipped()), Error);
}

TEST(Tk, Examples) {
  EXPECT_EQ(t_k(DigitGroup("926"), 97).text(), "023");
  EXPECT_EQ(t_k(DigitGroup("00"), 0).text(), "00");
  EXPECT_EQ(t_k(DigitGroup("99"), 1).text(), "00");
  EXPECT_EQ(t_k(DigitGroup("05"), Natural("100000000000000000005")).text(), "10");
  EXPECT_THROW(DigitGroup(""), Error);
  EXPECT_THROW(DigitGroup("1a"), Error);
}

TEST(Tk, PropertiesAgainstOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 1 + rng() % 30;
    std::string text(n, '0');
    for (char& c : text) c = static_cast<char>('0' + rng() % 10);
    Big k = rng();
    k = k * rng() + rng() % 1000;
    const DigitGroup g(text);
    const DigitGroup out = t_k(g, Natural(k.str()));
    Big modulus = 1;
    for (std::size_t j = 0; j < n; ++j) modulus *= 10;
    Big value = 0;
    for (char c : text) value = value * 10 + (c - '0');
    std::string expected = Big((value + k) % modulus).str();
    expected.insert(0, n - expected.size(), '0');
    ASSERT_EQ(out.width(), n);
    ASSERT_EQ(out.text(), expected);
    ASSERT_EQ(t_k(g, Natural(k.str()) + Natural(modulus.str())), out);
  }
}

TEST(Tk, EachValueHitByExactlyOneResidue) {
  const DigitGroup g("37");
  std::vector<int> hits(100, 0);
  for (int k = 0; k < 100; ++k) ++hits[std::stoi(t_k(g, k).text())];
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Compute, AlgorithmsAgreeWithOracle) {
  EXPECT_EQ(spigot_digits(1000), oracle_digits());
  EXPECT_EQ(series_digits(1000), oracle_digits());
  EXPECT_EQ(machin_digits(1000), oracle_digits());
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 9u, 17u}) {
    EXPECT_EQ(spigot_digits(n), oracle_digits().substr(0, n)) << n;
    EXPECT_EQ(series_digits(n), oracle_digits().substr(0, n)) << n;
    EXPECT_EQ(machin_digits(n), oracle_digits().substr(0, n)) << n;
  }
}

TEST(Compute, AlgorithmsAgreeAtTenThousand) {
  const std::string s = series_digits(10000);
  EXPECT_EQ(spigot_digits(10000), s);
  EXPECT_EQ(machin_digits(10000), s);
}

TEST(Compute, Budget) {
  BuildBudget small;
  small.max_digits = 100;
  EXPECT_THROW(build_cache(101, Algorithm::kSeries, small), ResourceBudgetExceeded);
  EXPECT_EQ(build_cache(100, Algorithm::kSeries, small).size(), 100u);
  BuildBudget instant;
  instant.time_limit = std::chrono::nanoseconds(1);
  EXPECT_THROW(build_cache(200000, Algorithm::kSpigot, instant), ResourceBudgetExceeded);
  EXPECT_EQ(parse_algorithm("machin"), Algorithm::kMachin);
  EXPECT_THROW(parse_algorithm("bbp"), Error);
}

TEST(CacheIo, RoundTrip) {
  for (std::size_t n : {5u, 6u, 1000u}) {
    const DigitCache cache(oracle_digits().substr(0, n));
    std::stringstream buffer;
    write_cache(buffer, cache);
    const std::string bytes = buffer.str();
    EXPECT_EQ(bytes.size(), 4 + 2 + 8 + (n + 1) / 2 + 4);
    EXPECT_EQ(bytes.substr(0, 4), "PIDC");
    const DigitCache back = read_cache(buffer);
    EXPECT_EQ(back.text(), cache.text());
    EXPECT_EQ(back.checksum(), cache.checksum());
  }
  EXPECT_EQ(shipped().checksum(), 0x4809f564u);
}

TEST(CacheIo, CorruptionIsDetected) {
  std::stringstream buffer;
  write_cache(buffer, shipped());
  const std::string good = buffer.str();
  for (std::size_t pos : {0ul, 4ul, 6ul, 20ul, good.size() / 2, good.size() - 1}) {
    std::string bad = good;
    bad[pos] = static_cast<char>(bad[pos] ^ 0x10);
    std::istringstream in(bad);
    EXPECT_THROW(read_cache(in), FormatError) << pos;
  }
  std::istringstream truncated(good.substr(0, good.size() - 3));
  EXPECT_THROW(read_cache(truncated), FormatError);
  EXPECT_THROW(DigitCache("27182"), Error);
  EXPECT_THROW(DigitCache("1415x"), Error);
}

std::string naive_champernowne(std::size_t length) {
  std::string s;
  for (unsigned long i = 1; s.size() < length; ++i) s += std::to_string(i);
  return s.substr(0, length);
}

TEST(Champernowne, MatchesNaiveConcatenation) {
  const ChampernowneDigits source;
  const std::string naive = naive_champernowne(400000);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t n = 1 + rng() % 25;
    const std::size_t m = 1 + rng() % (naive.size() - n);
    ASSERT_EQ(source.digits(m, n), naive.substr(m - 1, n)) << m;
  }
  EXPECT_EQ(source.digits(1, 15), "123456789101112");
  EXPECT_EQ(champernowne_prefix(0), 0);
  EXPECT_EQ(champernowne_prefix(1), 9);
  EXPECT_EQ(champernowne_prefix(2), 189);
  EXPECT_EQ(champernowne_prefix(3), 2889);
}

TEST(Champernowne, HugePlacements) {
  const ChampernowneDigits source;
  // Position champernowne_prefix(d) + 1 begins the number 10^d.
  const Natural start = champernowne_prefix(200) + 1;
  EXPECT_EQ(source.digits(start, 3), "100");
  EXPECT_EQ(source.digits(start - 2, 4), "9910");
  // Last digit of 10^200, then 10^200 + 1.
  EXPECT_EQ(source.digits(start + 200, 6), "010000");
}

}  // namespace
}  // namespace plottery::pi
