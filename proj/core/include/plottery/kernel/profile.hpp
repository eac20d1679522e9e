#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plottery/lang/syntax.hpp"

namespace plottery::kernel {

using lang::Formula;

/// One axiom schema, decided by a structural matcher.
struct Schema {
  std::string_view name;
  bool (*matches)(const Formula&);
};

/// A Hilbert-style axiom system: schemas plus the rules it admits.
class AxiomProfile {
 public:
  AxiomProfile(std::string name, std::vector<Schema> logical, std::vector<Schema> nonlogical,
               bool modus_ponens, bool generalization);

  /// First-order PA: propositional and quantifier schemas, equality,
  /// the successor/plus/times axioms and the induction schema; MP and Gen.
  static const AxiomProfile& pa_core();

  /// Reflexivity, ∧-introduction, ∃-introduction and K under MP only.
  /// Small enough that inconsistency proofs can be enumerated.
  static const AxiomProfile& mini();

  /// "pa-core" or "mini"; throws plottery::Error otherwise.
  static const AxiomProfile& by_name(std::string_view name);

  const std::string& name() const { return name_; }
  std::span<const Schema> logical_schemas() const { return logical_; }
  std::span<const Schema> nonlogical_schemas() const { return nonlogical_; }
  bool modus_ponens() const { return modus_ponens_; }
  bool generalization() const { return generalization_; }

  /// The first schema the formula instantiates, or nullptr.
  const Schema* match(const Formula& formula, std::uint64_t* steps = nullptr) const;
  const Schema* find(std::string_view schema_name) const;

 private:
  std::string name_;
  std::vector<Schema> logical_;
  std::vector<Schema> nonlogical_;
  bool modus_ponens_;
  bool generalization_;
};

/// Individual matchers, exposed for tests.
namespace schemas {
bool k(const Formula& f);
bool s(const Formula& f);
bool contraposition(const Formula& f);
bool and_elim_left(const Formula& f);
bool and_elim_right(const Formula& f);
bool and_intro(const Formula& f);
bool or_intro_left(const Formula& f);
bool or_intro_right(const Formula& f);
bool or_elim(const Formula& f);
bool forall_elim(const Formula& f);
bool exists_intro(const Formula& f);
bool forall_distribution(const Formula& f);
bool exists_elim(const Formula& f);
bool reflexivity(const Formula& f);
bool equality_euclid(const Formula& f);
bool equality_successor(const Formula& f);
bool equality_plus_left(const Formula& f);
bool equality_plus_right(const Formula& f);
bool equality_times_left(const Formula& f);
bool equality_times_right(const Formula& f);
bool zero_not_successor(const Formula& f);
bool successor_injective(const Formula& f);
bool plus_zero(const Formula& f);
bool plus_successor(const Formula& f);
bool times_zero(const Formula& f);
bool times_successor(const Formula& f);
bool induction(const Formula& f);
}  // namespace schemas

}  // namespace plottery::kernel
