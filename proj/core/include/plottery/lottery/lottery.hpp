#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plottery/kernel/profile.hpp"
#include "plottery/natural.hpp"
#include "plottery/pi/digits.hpp"
#include "plottery/theory/psi.hpp"

namespace plottery::lottery {

using pi::DigitGroup;
using pi::DigitSource;

/// One evaluation of t_k(d[placement]₍ₙ₎) = d[n]₍ₙ₎ over digit source d.
struct WinnerVerdict {
  std::size_t n = 0;
  Natural k;
  Natural placement;
  DigitGroup lhs{"0"};
  DigitGroup rhs{"0"};
  bool is_winner = false;
};

/// Throws CacheExhausted if the source cannot serve either group.
WinnerVerdict winner_eq(std::size_t n, const Natural& placement, const Natural& k,
                        const DigitSource& digits);

/// The unique k in [0, 10^n) that makes n a winner at this placement.
Natural construct_winning_k(std::size_t n, const Natural& placement, const DigitSource& digits);

enum class Stage { kProof = 1, kIndex = 2, kWinner = 3 };

/// Outcome of the three-stage certificate check. `steps[i]` is the work
/// spent in stage i+1: kernel steps, stream entries examined, digits
/// compared.
struct CertResult {
  bool accepted = false;
  std::optional<Stage> rejected_at;
  std::string reason;
  std::array<std::uint64_t, 3> steps{};
  std::optional<std::size_t> index;
  std::optional<WinnerVerdict> winner;
};

/// (i) p must decode to a valid proof of ∃y A(⌈0=1⌉, y) for the A coded by
/// g; (ii) the index n of p is found by walking `psi` upward from ψ_1;
/// (iii) n must be a winner at placement rank(p) under t_k.
/// Throws StreamExhausted if a bounded stream ends before reaching p after
/// (i) succeeded, and propagates CacheExhausted from (iii).
CertResult check_certificate(const Natural& g, const Natural& p, const Natural& k,
                             theory::PsiSource& psi, const DigitSource& digits,
                             const kernel::AxiomProfile& profile);

struct MwReport {
  Natural k;
  std::size_t scan_bound = 0;
  std::vector<std::size_t> winners{0};
  std::size_t max_winner = 0;
  /// Entries actually evaluated; less than scan_bound when truncated.
  std::size_t scanned = 0;
  bool truncated = false;
  std::string truncation_reason;
};

/// Winners among ψ_1..ψ_nmax, with 0 always counted. A stream that ends
/// (ExhaustedBound) or digits that run out (CacheExhausted) truncate the
/// report instead of failing it.
MwReport scan_max_winner(const Natural& k, std::size_t nmax, theory::PsiSource& psi,
                         const DigitSource& digits);

struct SearchBudget {
  /// Largest admissible |w|^j, in decimal digits.
  Natural max_certificate_length = 1'000'000;
  /// Largest number of stream entries examined.
  std::size_t max_candidates = 1'000'000;
};

struct BruteResult {
  bool yes = false;
  Natural length_bound;  // |w|^j
  std::optional<Natural> witness;
  std::size_t candidates = 0;
};

/// Decides whether some p with fewer than |w|^j decimal digits passes
/// check_certificate(w, p, k). Only stream entries can pass stage (ii), so
/// the search walks `psi` in code order up to the length bound. Throws
/// ResourceBudgetExceeded when the bound or the candidate count is over
/// budget.
BruteResult brute_force_solve(const Natural& w, std::size_t j, const Natural& k,
                              theory::PsiSource& psi, const DigitSource& digits,
                              const kernel::AxiomProfile& profile,
                              const SearchBudget& budget = {});

/// Record-stream schema tag shared by every JSON line the tools emit.
inline constexpr const char* kRecordSchema = "plottery.v1";

/// {"schema", "type": "winner", "k", "n", "placement", "lhs", "rhs",
/// "isWinner"} on one line. Naturals are decimal strings.
void write_record(std::ostream& out, const WinnerVerdict& verdict);

}  // namespace plottery::lottery
