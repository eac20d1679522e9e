#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "plottery/natural.hpp"
#include "plottery/theory/theory.hpp"

namespace plottery::theory {

/// ψ_n: the n-th lottery number in code order, with its digit placement.
struct PsiEntry {
  std::size_t index = 0;  // n, 1-based
  GodelCode code;
  Natural placement;  // rank(code)
  std::optional<GodelCode> theory;  // the g it answers, when known
};

struct SyntheticSpec {
  std::uint64_t seed = 1;
  double density = 0.01;  // geometric gap parameter over Γ ranks
};

struct EnumeratedSpec {
  std::size_t max_formula_length = 11;
  std::optional<Natural> code_bound;
};

/// A stream ψ_1 < ψ_2 < ... . Entries are materialized on demand and kept,
/// so at(n) is stable across calls. Bounded backends throw ExhaustedBound
/// past their last entry.
class PsiSource {
 public:
  /// Γ walked in rank order with geometric gaps. Not lottery numbers; for
  /// probability and scaling experiments only.
  static PsiSource synthetic(SyntheticSpec spec);
  /// The canonical Mini universe (see mini_universe), re-recognized
  /// through is_lottery_number and cut at `code_bound`.
  static PsiSource enumerated(EnumeratedSpec spec);
  /// Explicit codes; must be strictly increasing and in Γ.
  static PsiSource listed(std::vector<PsiEntry> entries, std::string label);

  PsiSource(PsiSource&&) noexcept;
  PsiSource& operator=(PsiSource&&) noexcept;
  ~PsiSource();

  /// Next entry after the cursor.
  const PsiEntry& next();
  /// ψ_n for n ≥ 1.
  const PsiEntry& at(std::size_t n);
  /// Materializes up to n entries and returns how many exist (≤ n).
  std::size_t available(std::size_t n);
  /// Scans from ψ_1 until code ≥ p. Returns the index if code == p.
  /// `steps` counts entries examined.
  std::optional<std::size_t> index_of(const Natural& p, std::uint64_t* steps = nullptr);

  std::span<const PsiEntry> materialized() const { return entries_; }
  void rewind() { cursor_ = 0; }
  bool bounded() const;
  const std::string& label() const { return label_; }

  class Backend;

 private:
  PsiSource(std::unique_ptr<Backend> backend, std::string label);
  bool grow();

  std::unique_ptr<Backend> backend_;
  std::vector<PsiEntry> entries_;
  std::size_t cursor_ = 0;
  std::string label_;
};

/// Text format: "# plottery psi v1", then one tab-separated record per
/// entry: n, code, placement, and optionally the theory code.
void write_psi(std::ostream& out, std::span<const PsiEntry> entries);
std::vector<PsiEntry> read_psi(std::istream& in);
std::vector<PsiEntry> read_psi_file(const std::filesystem::path& path);

}  // namespace plottery::theory
