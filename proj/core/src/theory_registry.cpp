#include "plottery/theory/registry.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "plottery/errors.hpp"
#include "plottery/lang/parser.hpp"

namespace plottery::theory {

namespace {
constexpr const char* kSchema = "plottery.theories.v1";
}

std::vector<RegistryEntry> read_registry(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("theory registry: ") + e.what());
  }
  if (doc.value("schema", "") != kSchema) {
    throw FormatError(std::string("theory registry: schema must be ") + kSchema);
  }
  std::vector<RegistryEntry> out;
  try {
    for (const auto& item : doc.at("theories")) {
      RegistryEntry entry;
      entry.name = item.at("name").get<std::string>();
      entry.formula = item.at("formula").get<std::string>();
      if (item.contains("code")) entry.expected_code = parse_natural(item.at("code").get<std::string>());
      out.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("theory registry: ") + e.what());
  } catch (const Error& e) {
    throw FormatError(std::string("theory registry: ") + e.what());
  }
  return out;
}

std::vector<RegistryEntry> read_registry_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_registry(in);
}

void write_registry(std::ostream& out, const std::vector<RegistryEntry>& entries) {
  nlohmann::json theories = nlohmann::json::array();
  for (const RegistryEntry& e : entries) {
    nlohmann::json item = {{"name", e.name}, {"formula", e.formula}};
    if (e.expected_code) item["code"] = e.expected_code->get_str();
    theories.push_back(std::move(item));
  }
  out << nlohmann::json{{"schema", kSchema}, {"theories", theories}}.dump(2) << '\n';
}

NamedTheory resolve(const RegistryEntry& entry) {
  const std::string where = "theory '" + entry.name + "': ";
  Formula formula = [&] {
    try {
      return lang::parse_formula(entry.formula);
    } catch (const SyntaxError& e) {
      throw FormatError(where + e.what());
    }
  }();
  if (formula.free_variables() != lang::VarSet{kVarX, kVarY}) {
    throw FormatError(where + "free variables must be exactly x and y");
  }
  TheoryCode theory = TheoryCode::from_formula(formula);
  if (entry.expected_code && *entry.expected_code != theory.code().value()) {
    throw FormatError(where + "code " + theory.code().to_string() + " differs from the recorded " +
                      entry.expected_code->get_str());
  }
  return {entry.name, std::move(theory)};
}

}  // namespace plottery::theory
