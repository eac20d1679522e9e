#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace plottery::prob {

/// A finite product Π(1 - 10^-j) held exactly, with its decimal
/// truncation. The infinite product lies in
/// [decimal - error_bound, decimal + 10^-precision].
struct ProductValue {
  mpq_class exact;
  std::string decimal;  // truncated toward zero to `precision` places
  std::size_t precision = 0;
  std::size_t first = 1;  // first factor index j
  std::size_t terms = 0;
  mpq_class error_bound;  // Σ_{j > last} 10^-j = 10^-last / 9
};

/// Π_{j=1..terms}(1 - 10^-j). terms must be at least 1.
ProductValue product_p(std::size_t terms, std::size_t precision);

/// Π_{j=n+1..n+terms}(1 - 10^-j); tail_p(0, t, d) equals product_p(t, d).
ProductValue tail_p(std::size_t n, std::size_t terms, std::size_t precision);

/// Truncates a non-negative rational to `precision` decimal places.
std::string truncate_decimal(const mpq_class& value, std::size_t precision);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n_first = 1;
  std::size_t n_last = 0;
  std::vector<std::size_t> winners;
  std::size_t stopped_at_stage = 0;
};

struct SimulationOptions {
  unsigned threads = 1;
  bool keep_records = false;
};

struct SimulationResult {
  std::size_t nmax = 0;
  std::uint64_t trials = 0;
  std::uint64_t no_winner_trials = 0;
  std::vector<std::uint64_t> winner_counts;  // index n-1
  std::vector<TrialRecord> records;

  mpq_class no_winner_frequency() const;
  double winner_frequency(std::size_t n) const;
};

/// Each trial draws a uniform width-n digit string for n = 1..nmax; n wins
/// iff the draw is all zeros (probability 10^-n). Trial i runs on its own
/// generator seeded from (seed, i), so any thread count gives the same
/// result.
SimulationResult simulate_winners(std::size_t nmax, std::uint64_t trials, std::uint64_t seed,
                                  const SimulationOptions& options = {});

/// Stage s searches n in (w, w + horizon] for the next winner, w being
/// the previous winner (0 at first). Stops at the first stage that finds
/// none; stopped_at_stage is max_stages + 1 if every stage succeeded.
TrialRecord sequential_experiment(std::size_t max_stages, std::size_t horizon, std::uint64_t seed);

/// Sub-seed for trial i.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// One uniform draw over width-n digit strings; true iff all zeros.
template <typename Engine>
bool draw_zero(Engine& engine, std::size_t n);

}  // namespace plottery::prob

#include "plottery/prob/prob_inl.hpp"
