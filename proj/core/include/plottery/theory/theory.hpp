#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "plottery/kernel/profile.hpp"
#include "plottery/lang/godel.hpp"
#include "plottery/lang/syntax.hpp"

namespace plottery::theory {

using lang::Formula;
using lang::GodelCode;
using lang::Term;

/// Canonical indices of the two free variables of A(x,y).
inline constexpr lang::VarIndex kVarX = 0;
inline constexpr lang::VarIndex kVarY = 1;

/// An element of G: the code of a formula A(x,y) whose free variables are
/// exactly x and y.
class TheoryCode {
 public:
  /// nullopt unless `code` decodes to a canonical formula with free
  /// variables {x, y}.
  static std::optional<TheoryCode> from_code(const Natural& code);
  /// Throws plottery::Error if the free variables are not {x, y}.
  static TheoryCode from_formula(const Formula& formula);

  const GodelCode& code() const { return code_; }
  const Formula& formula() const { return formula_; }

 private:
  TheoryCode(GodelCode code, Formula formula)
      : code_(std::move(code)), formula_(std::move(formula)) {}

  GodelCode code_;
  Formula formula_;
};

bool in_g(const Natural& code);

/// ⌈0=1⌉: the code of the word O=SO (6393 under alphabet v1).
const GodelCode& falsum_code();
/// The numeral of falsum_code().
const Term& falsum_numeral();

/// ∃y A(⌈0=1⌉, y): the numeral of ⌈0=1⌉ substituted for x, y closed
/// existentially. Always a sentence.
Formula inconsistency_target(const TheoryCode& theory);

/// True iff p decodes to a proof word whose proof is valid under `profile`
/// and concludes inconsistency_target(theory). Never throws.
bool is_lottery_number(const Natural& p, const TheoryCode& theory,
                       const kernel::AxiomProfile& profile);

/// Recovers A from a conclusion of shape ∃y B by abstracting every
/// occurrence of the ⌈0=1⌉ numeral not under a binder of x (including
/// numerals that end a longer successor run). nullopt if the shape does
/// not fit or the result is not in G.
std::optional<TheoryCode> extract_theory(const Formula& conclusion);

enum class Provability { kProved, kUnknown };

/// Searches y = 0..fuel for a witness of A(⌈b⌉, y), evaluating the
/// quantifier-free matrix exactly in the naturals. Sound only: kProved is
/// a certificate; kUnknown says nothing. Throws UnsupportedFormula if A
/// contains a quantifier.
Provability eval_provable(const TheoryCode& theory, const Formula& b, std::uint64_t fuel);

/// Truth of a quantifier-free formula under x_i := assignment[i].
/// Throws UnsupportedFormula on quantifiers or unassigned variables.
bool evaluate(const Formula& formula, std::span<const Natural> assignment);
Natural evaluate(const Term& term, std::span<const Natural> assignment);

}  // namespace plottery::theory
