#include "plottery/prob/prob.hpp"

#include <optional>
#include <random>
#include <thread>

#include "plottery/errors.hpp"
#include "plottery/natural.hpp"

namespace plottery::prob {

std::string truncate_decimal(const mpq_class& value, std::size_t precision) {
  const Natural scaled = value.get_num() * pow10(precision) / value.get_den();
  std::string digits = scaled.get_str();
  if (digits.size() <= precision) digits.insert(0, precision + 1 - digits.size(), '0');
  const std::size_t point = digits.size() - precision;
  if (precision == 0) return digits;
  return digits.substr(0, point) + "." + digits.substr(point);
}

ProductValue tail_p(std::size_t n, std::size_t terms, std::size_t precision) {
  ProductValue value;
  value.exact = 1;
  for (std::size_t j = n + 1; j <= n + terms; ++j) {
    const Natural power = pow10(j);
    value.exact *= mpq_class(power - 1, power);
  }
  value.exact.canonicalize();
  value.decimal = truncate_decimal(value.exact, precision);
  value.precision = precision;
  value.first = n + 1;
  value.terms = terms;
  value.error_bound = mpq_class(Natural(1), pow10(n + terms) * 9);
  value.error_bound.canonicalize();
  return value;
}

ProductValue product_p(std::size_t terms, std::size_t precision) {
  if (terms == 0) throw Error("product needs at least one factor");
  return tail_p(0, terms, precision);
}

mpq_class SimulationResult::no_winner_frequency() const {
  mpq_class f(Natural(static_cast<unsigned long>(no_winner_trials)),
              Natural(static_cast<unsigned long>(trials)));
  f.canonicalize();
  return f;
}

double SimulationResult::winner_frequency(std::size_t n) const {
  return static_cast<double>(winner_counts.at(n - 1)) / static_cast<double>(trials);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 over the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct Tally {
  std::uint64_t no_winner = 0;
  std::vector<std::uint64_t> counts;
};

void run_trials(std::size_t nmax, std::uint64_t begin, std::uint64_t end, std::uint64_t seed,
                Tally& tally, std::vector<TrialRecord>* records) {
  tally.counts.assign(nmax, 0);
  for (std::uint64_t i = begin; i < end; ++i) {
    const std::uint64_t sub = trial_seed(seed, i);
    std::mt19937_64 engine(sub);
    TrialRecord record;
    record.seed = sub;
    record.n_last = nmax;
    for (std::size_t n = 1; n <= nmax; ++n) {
      if (draw_zero(engine, n)) {
        ++tally.counts[n - 1];
        record.winners.push_back(n);
      }
    }
    if (record.winners.empty()) ++tally.no_winner;
    if (records) (*records)[i] = std::move(record);
  }
}

}  // namespace

SimulationResult simulate_winners(std::size_t nmax, std::uint64_t trials, std::uint64_t seed,
                                  const SimulationOptions& options) {
  if (trials == 0) throw Error("simulation needs at least one trial");
  SimulationResult result;
  result.nmax = nmax;
  result.trials = trials;
  if (options.keep_records) result.records.resize(trials);
  std::vector<TrialRecord>* records = options.keep_records ? &result.records : nullptr;

  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.threads, trials));
  std::vector<Tally> tallies(workers);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    if (workers == 1) {
      run_trials(nmax, begin, end, seed, tallies[w], records);
    } else {
      pool.emplace_back(run_trials, nmax, begin, end, seed, std::ref(tallies[w]), records);
    }
  }
  for (std::thread& t : pool) t.join();

  result.winner_counts.assign(nmax, 0);
  for (const Tally& t : tallies) {
    result.no_winner_trials += t.no_winner;
    for (std::size_t n = 0; n < nmax; ++n) result.winner_counts[n] += t.counts[n];
  }
  return result;
}

TrialRecord sequential_experiment(std::size_t max_stages, std::size_t horizon, std::uint64_t seed) {
  std::mt19937_64 engine(trial_seed(seed, 0));
  TrialRecord record;
  record.seed = seed;
  std::size_t last = 0;
  for (std::size_t stage = 1; stage <= max_stages; ++stage) {
    std::optional<std::size_t> found;
    for (std::size_t n = last + 1; n <= last + horizon; ++n) {
      record.n_last = n;
      if (draw_zero(engine, n)) {
        found = n;
        break;
      }
    }
    if (!found) {
      record.stopped_at_stage = stage;
      return record;
    }
    record.winners.push_back(*found);
    last = *found;
  }
  record.stopped_at_stage = max_stages + 1;
  return record;
}

}  // namespace plottery::prob
