#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace plottery::cli {

/// Everything a run depends on. Loaded from JSON, then overridden by flags.
struct Config {
  int alphabet_version = 1;
  std::string profile = "pa-core";

  std::string digits = "pi";  // pi | champernowne
  std::string cache_path;     // empty: build in memory
  std::size_t cache_digits = 1'000'000;
  std::string algorithm = "series";

  std::string psi_backend = "enumerated";  // enumerated | synthetic | file
  std::string psi_file;
  std::uint64_t seed = 1;
  double density = 0.01;
  std::size_t max_formula_length = 11;
  std::string code_bound;  // decimal, empty for none

  std::string max_certificate_length = "1000000";
  std::size_t max_candidates = 1'000'000;
  std::size_t max_pi_digits = 100'000'000;
  double time_limit_s = 0;  // 0: none

  std::string output = "human";  // human | records
  unsigned threads = 1;
};

/// Unknown keys are an error so typos do not silently fall back.
Config config_from_json(const nlohmann::json& doc);
nlohmann::ordered_json config_to_json(const Config& config);
Config load_config(const std::string& path);

/// Throws plottery::Error on values outside their domain.
void validate(const Config& config);

}  // namespace plottery::cli
