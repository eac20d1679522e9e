#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plottery/theory/theory.hpp"

namespace plottery::theory {

/// One named theory as written in a registry file.
struct RegistryEntry {
  std::string name;
  std::string formula;  // surface syntax of A(x,y)
  std::optional<Natural> expected_code;
};

struct NamedTheory {
  std::string name;
  TheoryCode theory;
};

/// JSON: {"schema": "plottery.theories.v1", "theories": [{"name", "formula",
/// "code"?}, ...]}. Codes are decimal strings.
std::vector<RegistryEntry> read_registry(std::istream& in);
std::vector<RegistryEntry> read_registry_file(const std::filesystem::path& path);
void write_registry(std::ostream& out, const std::vector<RegistryEntry>& entries);

/// Parses the formula, requires it to be in G and, if given, to have the
/// expected code. Throws FormatError otherwise.
NamedTheory resolve(const RegistryEntry& entry);

}  // namespace plottery::theory
