#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "plottery/kernel/profile.hpp"
#include "plottery/lang/word.hpp"

namespace plottery::kernel {

struct AxiomInstance {
  std::string schema;
  bool operator==(const AxiomInstance&) const = default;
};

/// Line indices are 0-based; `major` holds (minor → this line).
struct ModusPonens {
  std::size_t minor;
  std::size_t major;
  bool operator==(const ModusPonens&) const = default;
};

struct Generalization {
  std::size_t premise;
  bool operator==(const Generalization&) const = default;
};

struct Unjustified {
  bool operator==(const Unjustified&) const = default;
};

using Justification = std::variant<AxiomInstance, ModusPonens, Generalization, Unjustified>;

std::string describe(const Justification& j);

/// A Hilbert-style derivation: one formula per line, each with the reason
/// it is admitted.
class Proof {
 public:
  Proof() = default;
  /// Throws plottery::Error if the two sequences differ in length.
  Proof(std::vector<Formula> lines, std::vector<Justification> justifications);

  void add(Formula line, Justification justification);

  std::span<const Formula> lines() const { return lines_; }
  std::span<const Justification> justifications() const { return justifications_; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }

 private:
  std::vector<Formula> lines_;
  std::vector<Justification> justifications_;
};

/// Result of checking a proof. `line` is 1-based and meaningful only for
/// invalid verdicts (0 for an empty proof).
struct Verdict {
  bool valid = false;
  std::size_t line = 0;
  std::string reason;

  static Verdict ok() { return {true, 0, {}}; }
  static Verdict invalid(std::size_t line, std::string reason) {
    return {false, line, std::move(reason)};
  }
  explicit operator bool() const { return valid; }
};

/// Work counter: formula nodes examined while matching and comparing.
struct CheckStats {
  std::uint64_t steps = 0;
};

/// Valid iff the proof is nonempty and every line is admitted by its
/// justification, which may only cite earlier lines. Total and
/// deterministic.
Verdict check(const Proof& proof, const AxiomProfile& profile, CheckStats* stats = nullptr);

/// Finds a justification for every line: axiom schema first, then modus
/// ponens from earlier lines, then generalization. Lines with none are
/// marked Unjustified, which check() rejects.
Proof justify(std::vector<Formula> lines, const AxiomProfile& profile, CheckStats* stats = nullptr);

/// The line separator inside proof words: the illegal pair "()".
inline constexpr lang::Glyph kLineBreak[2] = {lang::Glyph::kLParen, lang::Glyph::kRParen};

/// Line words joined by "()".
lang::Word to_word(const Proof& proof);

/// Splits on "()" and parses every segment. Throws MalformedProofWord on an
/// empty or unparseable segment.
std::vector<Formula> split_proof_word(const lang::Word& word);

/// split_proof_word followed by justify.
Proof from_word(const lang::Word& word, const AxiomProfile& profile, CheckStats* stats = nullptr);

/// Last line of a valid proof; throws InvalidProof otherwise.
Formula conclusion(const Proof& proof, const AxiomProfile& profile);

}  // namespace plottery::kernel
