#include "plottery/kernel/profile.hpp"

#include <optional>

#include "plottery/errors.hpp"

namespace plottery::kernel {

using lang::Term;
using Kind = Formula::Kind;

namespace schemas {
namespace {

bool is(const Formula& f, Kind kind) { return f.kind() == kind; }

bool is_implication(const Formula& f) { return is(f, Kind::kImplies); }

/// (s=t → X) with s, t returned through the out-parameters.
bool equation_premise(const Formula& f, Term& s, Term& t) {
  if (!is_implication(f) || !is(f.lhs(), Kind::kEquals)) return false;
  s = f.lhs().left_term();
  t = f.lhs().right_term();
  return true;
}

/// S^c u with c >= 1 written as S(v); returns v.
std::optional<Term> predecessor(const Term& term) {
  if (term.kind() != Term::Kind::kSuccessor) return std::nullopt;
  return Term::successor(term.inner(), term.successor_count() - 1);
}

bool equality_congruence(const Formula& f, Term::Kind op, bool left) {
  Term s = Term::zero(), t = Term::zero();
  if (!equation_premise(f, s, t)) return false;
  const Formula& c = f.rhs();
  if (!is(c, Kind::kEquals)) return false;
  Term a = c.left_term(), b = c.right_term();
  if (a.kind() != op || b.kind() != op) return false;
  if (left) return a.lhs() == s && b.lhs() == t && a.rhs() == b.rhs();
  return a.rhs() == s && b.rhs() == t && a.lhs() == b.lhs();
}

}  // namespace

// (a → (b → a))
bool k(const Formula& f) {
  return is_implication(f) && is_implication(f.rhs()) && f.rhs().rhs() == f.lhs();
}

// ((a → (b → c)) → ((a → b) → (a → c)))
bool s(const Formula& f) {
  if (!is_implication(f)) return false;
  const Formula l = f.lhs(), r = f.rhs();
  if (!is_implication(l) || !is_implication(l.rhs())) return false;
  if (!is_implication(r) || !is_implication(r.lhs()) || !is_implication(r.rhs())) return false;
  const Formula a = l.lhs(), b = l.rhs().lhs(), c = l.rhs().rhs();
  return r.lhs().lhs() == a && r.lhs().rhs() == b && r.rhs().lhs() == a && r.rhs().rhs() == c;
}

// ((¬a → ¬b) → (b → a))
bool contraposition(const Formula& f) {
  if (!is_implication(f) || !is_implication(f.lhs()) || !is_implication(f.rhs())) return false;
  const Formula l = f.lhs();
  if (!is(l.lhs(), Kind::kNot) || !is(l.rhs(), Kind::kNot)) return false;
  return f.rhs().lhs() == l.rhs().operand() && f.rhs().rhs() == l.lhs().operand();
}

// ((a∧b) → a)
bool and_elim_left(const Formula& f) {
  return is_implication(f) && is(f.lhs(), Kind::kAnd) && f.lhs().lhs() == f.rhs();
}

// ((a∧b) → b)
bool and_elim_right(const Formula& f) {
  return is_implication(f) && is(f.lhs(), Kind::kAnd) && f.lhs().rhs() == f.rhs();
}

// (a → (b → (a∧b)))
bool and_intro(const Formula& f) {
  if (!is_implication(f) || !is_implication(f.rhs())) return false;
  const Formula c = f.rhs().rhs();
  return is(c, Kind::kAnd) && c.lhs() == f.lhs() && c.rhs() == f.rhs().lhs();
}

// (a → (a∨b))
bool or_intro_left(const Formula& f) {
  return is_implication(f) && is(f.rhs(), Kind::kOr) && f.rhs().lhs() == f.lhs();
}

// (b → (a∨b))
bool or_intro_right(const Formula& f) {
  return is_implication(f) && is(f.rhs(), Kind::kOr) && f.rhs().rhs() == f.lhs();
}

// ((a → c) → ((b → c) → ((a∨b) → c)))
bool or_elim(const Formula& f) {
  if (!is_implication(f) || !is_implication(f.lhs()) || !is_implication(f.rhs())) return false;
  const Formula ac = f.lhs(), bc = f.rhs().lhs(), tail = f.rhs().rhs();
  if (!is_implication(bc) || !is_implication(tail) || !is(tail.lhs(), Kind::kOr)) return false;
  const Formula c = ac.rhs();
  return bc.rhs() == c && tail.rhs() == c && tail.lhs().lhs() == ac.lhs() &&
         tail.lhs().rhs() == bc.lhs();
}

// (∀x φ → φ[t/x])
bool forall_elim(const Formula& f) {
  if (!is_implication(f) || !is(f.lhs(), Kind::kForAll)) return false;
  std::optional<Term> witness;
  return lang::match_substitution(f.lhs().body(), f.lhs().bound_variable(), f.rhs(), witness);
}

// (φ[t/x] → ∃x φ)
bool exists_intro(const Formula& f) {
  if (!is_implication(f) || !is(f.rhs(), Kind::kExists)) return false;
  std::optional<Term> witness;
  return lang::match_substitution(f.rhs().body(), f.rhs().bound_variable(), f.lhs(), witness);
}

// (∀x(a → b) → (a → ∀x b)), x not free in a
bool forall_distribution(const Formula& f) {
  if (!is_implication(f) || !is(f.lhs(), Kind::kForAll) || !is_implication(f.rhs())) return false;
  const lang::VarIndex x = f.lhs().bound_variable();
  const Formula inner = f.lhs().body();
  if (!is_implication(inner)) return false;
  const Formula r = f.rhs();
  return r.lhs() == inner.lhs() && is(r.rhs(), Kind::kForAll) && r.rhs().bound_variable() == x &&
         r.rhs().body() == inner.rhs() && !lang::contains(inner.lhs().free_variables(), x);
}

// (∀x(a → b) → (∃x a → b)), x not free in b
bool exists_elim(const Formula& f) {
  if (!is_implication(f) || !is(f.lhs(), Kind::kForAll) || !is_implication(f.rhs())) return false;
  const lang::VarIndex x = f.lhs().bound_variable();
  const Formula inner = f.lhs().body();
  if (!is_implication(inner)) return false;
  const Formula r = f.rhs();
  return is(r.lhs(), Kind::kExists) && r.lhs().bound_variable() == x &&
         r.lhs().body() == inner.lhs() && r.rhs() == inner.rhs() &&
         !lang::contains(inner.rhs().free_variables(), x);
}

// t=t
bool reflexivity(const Formula& f) {
  return is(f, Kind::kEquals) && f.left_term() == f.right_term();
}

// (s=t → (s=r → t=r))
bool equality_euclid(const Formula& f) {
  Term s = Term::zero(), t = Term::zero();
  if (!equation_premise(f, s, t)) return false;
  const Formula r = f.rhs();
  if (!is_implication(r) || !is(r.lhs(), Kind::kEquals) || !is(r.rhs(), Kind::kEquals)) return false;
  return r.lhs().left_term() == s && r.rhs().left_term() == t &&
         r.lhs().right_term() == r.rhs().right_term();
}

// (s=t → Ss=St)
bool equality_successor(const Formula& f) {
  Term s = Term::zero(), t = Term::zero();
  if (!equation_premise(f, s, t) || !is(f.rhs(), Kind::kEquals)) return false;
  return f.rhs().left_term() == Term::successor(s) && f.rhs().right_term() == Term::successor(t);
}

// (s=t → (s+r)=(t+r))
bool equality_plus_left(const Formula& f) { return equality_congruence(f, Term::Kind::kPlus, true); }
// (s=t → (r+s)=(r+t))
bool equality_plus_right(const Formula& f) { return equality_congruence(f, Term::Kind::kPlus, false); }
// (s=t → (s·r)=(t·r))
bool equality_times_left(const Formula& f) { return equality_congruence(f, Term::Kind::kTimes, true); }
// (s=t → (r·s)=(r·t))
bool equality_times_right(const Formula& f) { return equality_congruence(f, Term::Kind::kTimes, false); }

// ¬St=O
bool zero_not_successor(const Formula& f) {
  if (!is(f, Kind::kNot) || !is(f.operand(), Kind::kEquals)) return false;
  return f.operand().left_term().kind() == Term::Kind::kSuccessor &&
         f.operand().right_term().kind() == Term::Kind::kZero;
}

// (Ss=St → s=t)
bool successor_injective(const Formula& f) {
  Term ss = Term::zero(), st = Term::zero();
  if (!equation_premise(f, ss, st) || !is(f.rhs(), Kind::kEquals)) return false;
  std::optional<Term> s = predecessor(ss), t = predecessor(st);
  return s && t && f.rhs().left_term() == *s && f.rhs().right_term() == *t;
}

// (t+O)=t
bool plus_zero(const Formula& f) {
  if (!is(f, Kind::kEquals)) return false;
  const Term l = f.left_term();
  return l.kind() == Term::Kind::kPlus && l.rhs().kind() == Term::Kind::kZero &&
         l.lhs() == f.right_term();
}

// (s+St)=S(s+t)
bool plus_successor(const Formula& f) {
  if (!is(f, Kind::kEquals)) return false;
  const Term l = f.left_term();
  if (l.kind() != Term::Kind::kPlus) return false;
  std::optional<Term> t = predecessor(l.rhs());
  return t && f.right_term() == Term::successor(Term::plus(l.lhs(), *t));
}

// (t·O)=O
bool times_zero(const Formula& f) {
  if (!is(f, Kind::kEquals)) return false;
  const Term l = f.left_term();
  return l.kind() == Term::Kind::kTimes && l.rhs().kind() == Term::Kind::kZero &&
         f.right_term().kind() == Term::Kind::kZero;
}

// (s·St)=((s·t)+s)
bool times_successor(const Formula& f) {
  if (!is(f, Kind::kEquals)) return false;
  const Term l = f.left_term();
  if (l.kind() != Term::Kind::kTimes) return false;
  std::optional<Term> t = predecessor(l.rhs());
  return t && f.right_term() == Term::plus(Term::times(l.lhs(), *t), l.lhs());
}

// ((φ[O/x] ∧ ∀x(φ → φ[Sx/x])) → ∀x φ)
bool induction(const Formula& f) {
  if (!is_implication(f) || !is(f.rhs(), Kind::kForAll) || !is(f.lhs(), Kind::kAnd)) return false;
  const lang::VarIndex x = f.rhs().bound_variable();
  const Formula phi = f.rhs().body();
  const Formula base = f.lhs().lhs(), step = f.lhs().rhs();
  if (!is(step, Kind::kForAll) || step.bound_variable() != x) return false;
  if (!is_implication(step.body()) || step.body().lhs() != phi) return false;
  const Term sx = Term::successor(Term::variable(x));
  return base == lang::substitute(phi, x, Term::zero()) &&
         step.body().rhs() == lang::substitute(phi, x, sx);
}

}  // namespace schemas

AxiomProfile::AxiomProfile(std::string name, std::vector<Schema> logical,
                           std::vector<Schema> nonlogical, bool modus_ponens, bool generalization)
    : name_(std::move(name)),
      logical_(std::move(logical)),
      nonlogical_(std::move(nonlogical)),
      modus_ponens_(modus_ponens),
      generalization_(generalization) {}

const AxiomProfile& AxiomProfile::pa_core() {
  static const AxiomProfile kProfile(
      "pa-core",
      {
          {"K", schemas::k},
          {"S", schemas::s},
          {"Contraposition", schemas::contraposition},
          {"AndElimL", schemas::and_elim_left},
          {"AndElimR", schemas::and_elim_right},
          {"AndIntro", schemas::and_intro},
          {"OrIntroL", schemas::or_intro_left},
          {"OrIntroR", schemas::or_intro_right},
          {"OrElim", schemas::or_elim},
          {"ForallElim", schemas::forall_elim},
          {"ExistsIntro", schemas::exists_intro},
          {"ForallDist", schemas::forall_distribution},
          {"ExistsElim", schemas::exists_elim},
          {"Refl", schemas::reflexivity},
          {"EqEuclid", schemas::equality_euclid},
          {"EqSucc", schemas::equality_successor},
          {"EqPlusL", schemas::equality_plus_left},
          {"EqPlusR", schemas::equality_plus_right},
          {"EqTimesL", schemas::equality_times_left},
          {"EqTimesR", schemas::equality_times_right},
      },
      {
          {"ZeroNotSucc", schemas::zero_not_successor},
          {"SuccInj", schemas::successor_injective},
          {"PlusZero", schemas::plus_zero},
          {"PlusSucc", schemas::plus_successor},
          {"TimesZero", schemas::times_zero},
          {"TimesSucc", schemas::times_successor},
          {"Induction", schemas::induction},
      },
      true, true);
  return kProfile;
}

const AxiomProfile& AxiomProfile::mini() {
  static const AxiomProfile kProfile("mini",
                                     {
                                         {"Refl", schemas::reflexivity},
                                         {"AndIntro", schemas::and_intro},
                                         {"ExistsIntro", schemas::exists_intro},
                                         {"K", schemas::k},
                                     },
                                     {}, true, false);
  return kProfile;
}

const AxiomProfile& AxiomProfile::by_name(std::string_view name) {
  if (name == "pa-core") return pa_core();
  if (name == "mini") return mini();
  throw Error("unknown axiom profile '" + std::string(name) + "' (expected pa-core or mini)");
}

const Schema* AxiomProfile::match(const Formula& formula, std::uint64_t* steps) const {
  for (const auto* list : {&logical_, &nonlogical_}) {
    for (const Schema& schema : *list) {
      if (steps) *steps += formula.size();
      if (schema.matches(formula)) return &schema;
    }
  }
  return nullptr;
}

const Schema* AxiomProfile::find(std::string_view schema_name) const {
  for (const auto* list : {&logical_, &nonlogical_}) {
    for (const Schema& schema : *list) {
      if (schema.name == schema_name) return &schema;
    }
  }
  return nullptr;
}

}  // namespace plottery::kernel
