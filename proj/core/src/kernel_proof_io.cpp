#include "plottery/kernel/proof_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "plottery/errors.hpp"
#include "plottery/lang/parser.hpp"

namespace plottery::kernel {
namespace {

constexpr std::string_view kSidecarHeader = "# plottery proof code v1";

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<Formula> read_proof_lines(std::istream& in) {
  std::vector<Formula> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string text = strip(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    try {
      lines.push_back(lang::parse_formula(text));
    } catch (const SyntaxError& e) {
      throw SyntaxError("proof line " + std::to_string(number) + ": " + e.message(), e.position());
    }
  }
  return lines;
}

Proof read_proof(std::istream& in, const AxiomProfile& profile) {
  return justify(read_proof_lines(in), profile);
}

Proof read_proof_file(const std::filesystem::path& path, const AxiomProfile& profile) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open proof file " + path.string());
  return read_proof(in, profile);
}

std::string format_proof(const Proof& proof) {
  std::ostringstream out;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    out << lang::to_text(proof.lines()[i]) << "  # " << (i + 1) << ": "
        << describe(proof.justifications()[i]) << '\n';
  }
  return out.str();
}

void write_code_sidecar(const std::filesystem::path& path, const lang::GodelCode& code) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << kSidecarHeader << '\n' << code.to_string() << '\n';
}

lang::GodelCode read_code_sidecar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code sidecar " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kSidecarHeader) {
    throw FormatError(path.string() + ": missing '" + std::string(kSidecarHeader) + "' header");
  }
  if (!std::getline(in, line)) throw FormatError(path.string() + ": missing code line");
  try {
    return lang::GodelCode::parse(strip(line));
  } catch (const Error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace plottery::kernel
