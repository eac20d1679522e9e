#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plottery/kernel/proof.hpp"
#include "plottery/theory/theory.hpp"

namespace plottery::theory {

/// Every formula of the Mini sublanguage (O, S, =, ∧, →, ∃, variables)
/// whose canonical word has at most `max_length` glyphs, grouped by length
/// and then in generation order.
std::vector<Formula> mini_formulas(std::size_t max_length);

/// Decides provability in the Mini profile and builds derivations.
///
/// Without generalization, Mini theorems are: reflexivity instances,
/// conjunctions of theorems, ∃v φ with some φ[t/v] a theorem, axiom
/// instances, a→b with b a theorem, and a→(c∧a) with c a theorem. The
/// only search is for ∃ witnesses, drawn from O, the closed terms of φ and
/// one-variable unifiers of its equations.
class MiniProver {
 public:
  bool provable(const Formula& goal) const;
  std::optional<kernel::Proof> prove(const Formula& goal) const;

  /// Witnesses tried for ∃v body, shortest first.
  std::vector<Term> witness_candidates(lang::VarIndex v, const Formula& body) const;
};

struct UniverseEntry {
  TheoryCode theory;
  kernel::Proof proof;
  GodelCode code;
};

/// One canonical proof of inconsistency_target(A) for each A in G among
/// mini_formulas(max_formula_length) that MiniProver can prove, sorted by
/// proof code.
std::vector<UniverseEntry> mini_universe(std::size_t max_formula_length);

}  // namespace plottery::theory
