#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "plottery/kernel/proof.hpp"
#include "plottery/lang/godel.hpp"

namespace plottery::kernel {

/// Proof text: one formula per line in surface syntax; '#' starts a
/// comment; blank lines are skipped. Throws SyntaxError naming the line.
std::vector<Formula> read_proof_lines(std::istream& in);

/// Reads the lines and reconstructs justifications against `profile`.
Proof read_proof(std::istream& in, const AxiomProfile& profile);
Proof read_proof_file(const std::filesystem::path& path, const AxiomProfile& profile);

/// Canonical proof text with each justification as a trailing comment.
std::string format_proof(const Proof& proof);

/// Sidecar holding a proof word's Goedel code in decimal.
void write_code_sidecar(const std::filesystem::path& path, const lang::GodelCode& code);
lang::GodelCode read_code_sidecar(const std::filesystem::path& path);

}  // namespace plottery::kernel
