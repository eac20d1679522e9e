#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plottery/lang/word.hpp"
#include "plottery/natural.hpp"

namespace plottery::lang {

/// Variable x_i is spelled x followed by i primes; surface x and y alias
/// x_0 and x_1.
using VarIndex = std::uint32_t;

/// Sorted, duplicate-free set of variable indices.
using VarSet = std::vector<VarIndex>;

bool contains(const VarSet& set, VarIndex v);

/// Immutable term of L. Runs of successors are stored as one node with a
/// count, so the numeral of a large code stays a two-node tree.
class Term {
 public:
  enum class Kind : std::uint8_t { kZero, kVariable, kSuccessor, kPlus, kTimes };

  static Term zero();
  static Term variable(VarIndex index);
  /// S^count(inner); merges with an inner successor run. count 0 returns inner.
  static Term successor(const Term& inner, std::size_t count = 1);
  static Term plus(const Term& lhs, const Term& rhs);
  static Term times(const Term& lhs, const Term& rhs);

  Kind kind() const;
  VarIndex variable_index() const;
  std::size_t successor_count() const;
  /// Operand under a successor run.
  Term inner() const;
  Term lhs() const;
  Term rhs() const;

  const VarSet& free_variables() const;
  bool is_closed() const { return free_variables().empty(); }
  /// Length of the canonical word.
  std::size_t glyph_length() const;

  friend bool operator==(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend class Formula;
};

/// The numeral SS...SO with n successors.
Term numeral(std::size_t n);
/// Numeral of an arbitrary-size natural; only feasible for n that fit in
/// memory as a count, which every code below 2^64 does.
Term numeral(const Natural& n);
/// Value of a numeral term, or nullopt if the term is not S^n O.
std::optional<std::size_t> numeral_value(const Term& term);

class Formula {
 public:
  enum class Kind : std::uint8_t { kEquals, kNot, kImplies, kAnd, kOr, kForAll, kExists };

  static Formula equals(const Term& lhs, const Term& rhs);
  static Formula negation(const Formula& operand);
  static Formula implies(const Formula& lhs, const Formula& rhs);
  static Formula conjunction(const Formula& lhs, const Formula& rhs);
  static Formula disjunction(const Formula& lhs, const Formula& rhs);
  static Formula for_all(VarIndex variable, const Formula& body);
  static Formula exists(VarIndex variable, const Formula& body);

  Kind kind() const;
  bool is_binary() const;
  bool is_quantifier() const;

  /// Sides of an equation.
  Term left_term() const;
  Term right_term() const;
  /// Operand of a negation.
  Formula operand() const;
  /// Sides of a binary connective.
  Formula lhs() const;
  Formula rhs() const;
  VarIndex bound_variable() const;
  Formula body() const;

  const VarSet& free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }
  std::size_t glyph_length() const;
  /// Node count; a cost measure for the proof checker.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Largest variable index occurring anywhere (free or bound), or nullopt.
std::optional<VarIndex> max_variable(const Formula& f);

Term substitute(const Term& term, VarIndex variable, const Term& replacement);

/// Capture-avoiding: a binder that would capture a variable of the
/// replacement is renamed to a fresh index first.
Formula substitute(const Formula& formula, VarIndex variable, const Term& replacement);

/// True if no free occurrence of `variable` in `formula` lies under a
/// binder of a variable of `replacement`.
bool free_for(const Formula& formula, VarIndex variable, const Term& replacement);

/// Solves pattern[t/variable] == target for t, requiring t free for the
/// variable. Returns false if no such t exists; `witness` is left empty
/// when the variable does not occur free in the pattern.
bool match_substitution(const Formula& pattern, VarIndex variable, const Formula& target,
                        std::optional<Term>& witness);

Word to_word(const Term& term);
Word to_word(const Formula& formula);
std::string to_text(const Term& term);
std::string to_text(const Formula& formula);

}  // namespace plottery::lang
