#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "plottery/prob/prob.hpp"

namespace plottery::prob {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int pow10(std::size_t n) {
  cpp_int r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 10;
  return r;
}

// Π_{j=from..to}(1 - 10^-j) as an exact Boost rational.
cpp_rational oracle_product(std::size_t from, std::size_t to) {
  cpp_rational r = 1;
  for (std::size_t j = from; j <= to; ++j) r *= cpp_rational(pow10(j) - 1, pow10(j));
  return r;
}

std::string oracle_truncated(const cpp_rational& v, std::size_t digits) {
  const cpp_int scaled = numerator(v) * pow10(digits) / denominator(v);
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  return s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

mpq_class to_mpq(const cpp_rational& v) {
  mpq_class q(numerator(v).str() + "/" + denominator(v).str());
  q.canonicalize();
  return q;
}

TEST(Product, SmallCases) {
  const auto one = product_p(1, 5);
  EXPECT_EQ(one.exact, mpq_class(9, 10));
  EXPECT_EQ(one.decimal, "0.90000");
  EXPECT_EQ(product_p(30, 2).decimal, "0.89");
  EXPECT_THROW(product_p(0, 2), std::exception);
}

TEST(Product, ThirtyDigitsMatchRationalOracle) {
  const auto v = product_p(30, 30);
  const cpp_rational oracle = oracle_product(1, 30);
  EXPECT_EQ(v.exact, to_mpq(oracle));
  EXPECT_EQ(v.decimal, oracle_truncated(oracle, 30));
  EXPECT_EQ(v.decimal.substr(0, 10), "0.89001009");
  EXPECT_EQ(v.error_bound, mpq_class(1) / mpq_class(pow10(30).str()) / 9);
}

TEST(Product, ErrorBoundBracketsLongerProducts) {
  for (std::size_t terms : {1u, 3u, 10u, 30u}) {
    const auto v = product_p(terms, 60);
    const auto longer = product_p(terms + 40, 60);
    EXPECT_LT(longer.exact, v.exact);
    EXPECT_GE(longer.exact, v.exact - v.error_bound) << terms;
  }
}

TEST(Product, MonotoneAndStableAcrossPrecision) {
  for (std::size_t t = 1; t < 40; ++t) EXPECT_GT(product_p(t, 50).exact, product_p(t + 1, 50).exact);
  const std::string at40 = product_p(30, 40).decimal;
  const std::string at60 = product_p(30, 60).decimal;
  EXPECT_EQ(at40, at60.substr(0, at40.size()));
  EXPECT_EQ(product_p(30, 30).decimal, at40.substr(0, 32));
}

TEST(Tail, DefinitionAndBounds) {
  EXPECT_EQ(tail_p(0, 25, 30).exact, product_p(25, 30).exact);
  EXPECT_EQ(tail_p(0, 25, 30).decimal, product_p(25, 30).decimal);
  mpq_class previous = tail_p(0, 40, 40).exact;
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto t = tail_p(n, 40, 60);
    EXPECT_GT(t.exact, previous);
    previous = t.exact;
    EXPECT_EQ(t.exact, to_mpq(oracle_product(n + 1, n + 40)));
    const mpq_class limit = mpq_class(12, 10) / mpq_class(pow10(n + 1).str());
    EXPECT_LE(1 - t.exact, limit) << n;
  }
}

TEST(Truncate, TowardZero) {
  EXPECT_EQ(truncate_decimal(mpq_class(2, 3), 4), "0.6666");
  EXPECT_EQ(truncate_decimal(mpq_class(1), 2), "1.00");
  EXPECT_EQ(truncate_decimal(mpq_class(1, 1000), 2), "0.00");
}

TEST(Simulate, EmptyRange) {
  const auto r = simulate_winners(0, 100, 1);
  EXPECT_EQ(r.no_winner_frequency(), 1);
  EXPECT_EQ(r.no_winner_trials, 100u);
}

TEST(Simulate, DeterministicAcrossThreads) {
  SimulationOptions one{1, true};
  SimulationOptions four{4, true};
  const auto a = simulate_winners(6, 20000, 99, one);
  const auto b = simulate_winners(6, 20000, 99, four);
  EXPECT_EQ(a.no_winner_trials, b.no_winner_trials);
  EXPECT_EQ(a.winner_counts, b.winner_counts);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].seed, b.records[i].seed);
    EXPECT_EQ(a.records[i].winners, b.records[i].winners);
    EXPECT_TRUE(std::is_sorted(a.records[i].winners.begin(), a.records[i].winners.end()));
  }
  const auto c = simulate_winners(6, 20000, 100, one);
  EXPECT_NE(a.winner_counts, c.winner_counts);
}

TEST(Simulate, FrequenciesNearModel) {
  const std::uint64_t trials = 200000;
  const auto r = simulate_winners(4, trials, 7, {4, false});
  for (std::size_t n = 1; n <= 3; ++n) {
    const double p = std::pow(10.0, -static_cast<double>(n));
    const double sigma = std::sqrt(p * (1 - p) / trials);
    EXPECT_LT(std::abs(r.winner_frequency(n) - p), 4 * sigma) << n;
  }
  const double q = product_p(4, 20).exact.get_d();
  const double sigma = std::sqrt(q * (1 - q) / trials);
  EXPECT_LT(std::abs(r.no_winner_frequency().get_d() - q), 3 * sigma);
}

TEST(DrawZero, SingleDigitUniform) {
  std::mt19937_64 engine(3);
  int zeros = 0;
  for (int i = 0; i < 100000; ++i) zeros += draw_zero(engine, 1);
  EXPECT_NEAR(zeros, 10000, 4 * std::sqrt(100000 * 0.09));
  for (int i = 0; i < 1000; ++i) EXPECT_FALSE(draw_zero(engine, 40));
}

TEST(Sequential, HorizonZeroStopsAtOnce) {
  const auto r = sequential_experiment(5, 0, 1);
  EXPECT_EQ(r.stopped_at_stage, 1u);
  EXPECT_TRUE(r.winners.empty());
}

TEST(Sequential, Deterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = sequential_experiment(10, 4, seed);
    const auto b = sequential_experiment(10, 4, seed);
    EXPECT_EQ(a.winners, b.winners);
    EXPECT_EQ(a.stopped_at_stage, b.stopped_at_stage);
    EXPECT_EQ(a.winners.size() + 1, a.stopped_at_stage);
    EXPECT_TRUE(std::is_sorted(a.winners.begin(), a.winners.end()));
  }
}

TEST(Sequential, StageOneFailureMatchesProduct) {
  const std::size_t runs = 10000, horizon = 3;
  std::size_t stopped_first = 0;
  for (std::size_t i = 0; i < runs; ++i) stopped_first += sequential_experiment(20, horizon, trial_seed(5, i)).stopped_at_stage == 1;
  const double q = product_p(horizon, 20).exact.get_d();
  const double sigma = std::sqrt(q * (1 - q) / runs);
  EXPECT_LT(std::abs(static_cast<double>(stopped_first) / runs - q), 3 * sigma);
}

}  // namespace
}  // namespace plottery::prob
