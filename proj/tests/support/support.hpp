#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "plottery/kernel/proof.hpp"
#include "plottery/kernel/proof_io.hpp"
#include "plottery/lang/alphabet.hpp"
#include "plottery/lang/syntax.hpp"
#include "plottery/lang/word.hpp"

namespace plottery::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(PLOTTERY_DATA_DIR) / relative;
}

inline const std::vector<std::string>& mini_fixtures() {
  static const std::vector<std::string> kFiles = {
      "proofs/mini/refl-and.proof", "proofs/mini/inconsistent-conj.proof",
      "proofs/mini/inconsistent-eq.proof"};
  return kFiles;
}

inline const std::vector<std::string>& pa_fixtures() {
  static const std::vector<std::string> kFiles = {
      "proofs/pa/identity.proof",       "proofs/pa/symmetry.proof",
      "proofs/pa/zero-not-succ.proof",  "proofs/pa/gen-refl.proof",
      "proofs/pa/induction-refl.proof", "proofs/pa/plus-zero-succ.proof"};
  return kFiles;
}

inline lang::Word random_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<unsigned> glyph(1, lang::kAlphabetSize);
  lang::Word w;
  for (std::size_t i = length(rng); i > 0; --i) w.push_back(*lang::glyph_from_index(glyph(rng)));
  return w;
}

inline lang::Term random_term(std::mt19937_64& rng, int depth, lang::VarIndex vars) {
  using lang::Term;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
  switch (pick(rng)) {
    case 0:
      return Term::zero();
    case 1:
    case 2:
      return Term::variable(std::uniform_int_distribution<lang::VarIndex>(0, vars - 1)(rng));
    case 3:
      return Term::successor(random_term(rng, depth - 1, vars),
                             std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    case 4:
      return Term::plus(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    default:
      return Term::times(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
  }
}

inline lang::Formula random_formula(std::mt19937_64& rng, int depth, lang::VarIndex vars = 3) {
  using lang::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 7);
  const auto sub = [&] { return random_formula(rng, depth - 1, vars); };
  const auto var = [&] { return std::uniform_int_distribution<lang::VarIndex>(0, vars - 1)(rng); };
  switch (pick(rng)) {
    case 0:
    case 1:
      return Formula::equals(random_term(rng, 2, vars), random_term(rng, 2, vars));
    case 2:
      return Formula::negation(sub());
    case 3:
      return Formula::implies(sub(), sub());
    case 4:
      return Formula::conjunction(sub(), sub());
    case 5:
      return Formula::disjunction(sub(), sub());
    case 6:
      return Formula::for_all(var(), sub());
    default:
      return Formula::exists(var(), sub());
  }
}

}  // namespace plottery::testing
