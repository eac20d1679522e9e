#include "config.hpp"

#include <fstream>
#include <set>

#include "plottery/errors.hpp"
#include "plottery/natural.hpp"

namespace plottery::cli {

namespace {

template <typename T>
void read(const nlohmann::json& section, const char* key, T& field) {
  if (section.contains(key) && !section.at(key).is_null()) field = section.at(key).get<T>();
}

void reject_unknown(const nlohmann::json& section, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : section.items()) {
    if (!known.count(key)) throw Error("unknown config key '" + where + key + "'");
  }
}

}  // namespace

Config config_from_json(const nlohmann::json& doc) {
  Config c;
  try {
    reject_unknown(doc, {"alphabet_version", "profile", "digits", "psi", "budget", "output", "threads"}, "");
    read(doc, "alphabet_version", c.alphabet_version);
    read(doc, "profile", c.profile);
    read(doc, "output", c.output);
    read(doc, "threads", c.threads);
    if (doc.contains("digits")) {
      const auto& d = doc.at("digits");
      reject_unknown(d, {"source", "cache", "n", "algorithm"}, "digits.");
      read(d, "source", c.digits);
      read(d, "cache", c.cache_path);
      read(d, "n", c.cache_digits);
      read(d, "algorithm", c.algorithm);
    }
    if (doc.contains("psi")) {
      const auto& p = doc.at("psi");
      reject_unknown(p, {"backend", "file", "seed", "density", "max_formula_length", "code_bound"}, "psi.");
      read(p, "backend", c.psi_backend);
      read(p, "file", c.psi_file);
      read(p, "seed", c.seed);
      read(p, "density", c.density);
      read(p, "max_formula_length", c.max_formula_length);
      read(p, "code_bound", c.code_bound);
    }
    if (doc.contains("budget")) {
      const auto& b = doc.at("budget");
      reject_unknown(b, {"max_certificate_length", "max_candidates", "max_pi_digits", "time_limit_s"}, "budget.");
      read(b, "max_certificate_length", c.max_certificate_length);
      read(b, "max_candidates", c.max_candidates);
      read(b, "max_pi_digits", c.max_pi_digits);
      read(b, "time_limit_s", c.time_limit_s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

nlohmann::ordered_json config_to_json(const Config& c) {
  nlohmann::ordered_json doc;
  doc["alphabet_version"] = c.alphabet_version;
  doc["profile"] = c.profile;
  doc["digits"] = {{"source", c.digits}, {"cache", c.cache_path}, {"n", c.cache_digits},
                   {"algorithm", c.algorithm}};
  doc["psi"] = {{"backend", c.psi_backend},
                {"file", c.psi_file},
                {"seed", c.seed},
                {"density", c.density},
                {"max_formula_length", c.max_formula_length},
                {"code_bound", c.code_bound}};
  doc["budget"] = {{"max_certificate_length", c.max_certificate_length},
                   {"max_candidates", c.max_candidates},
                   {"max_pi_digits", c.max_pi_digits},
                   {"time_limit_s", c.time_limit_s}};
  doc["output"] = c.output;
  doc["threads"] = c.threads;
  return doc;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config " + path);
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("config " + path + ": " + e.what());
  }
}

void validate(const Config& c) {
  if (c.alphabet_version != 1) throw Error("only alphabet version 1 exists");
  if (c.profile != "pa-core" && c.profile != "mini") throw Error("profile must be pa-core or mini");
  if (c.digits != "pi" && c.digits != "champernowne") throw Error("digits must be pi or champernowne");
  if (c.psi_backend != "enumerated" && c.psi_backend != "synthetic" && c.psi_backend != "file") {
    throw Error("psi backend must be enumerated, synthetic or file");
  }
  if (c.psi_backend == "file" && c.psi_file.empty()) throw Error("psi backend 'file' needs psi.file");
  if (c.output != "human" && c.output != "records") throw Error("output must be human or records");
  if (c.cache_digits == 0) throw Error("digits.n must be positive");
  if (!c.code_bound.empty()) parse_natural(c.code_bound);
  parse_natural(c.max_certificate_length);
}

}  // namespace plottery::cli
