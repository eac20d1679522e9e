#include "plottery/theory/theory.hpp"

#include "plottery/errors.hpp"
#include "plottery/kernel/proof.hpp"
#include "plottery/lang/parser.hpp"

namespace plottery::theory {

std::optional<TheoryCode> TheoryCode::from_code(const Natural& code) {
  if (!lang::in_gamma(code)) return std::nullopt;
  std::optional<Formula> formula = lang::try_parse_word(lang::decode(code));
  if (!formula || formula->free_variables() != lang::VarSet{kVarX, kVarY}) return std::nullopt;
  return TheoryCode(GodelCode(code), std::move(*formula));
}

TheoryCode TheoryCode::from_formula(const Formula& formula) {
  if (formula.free_variables() != lang::VarSet{kVarX, kVarY}) {
    throw Error("formula " + lang::to_text(formula) +
                " does not have exactly the free variables x and y");
  }
  return TheoryCode(lang::encode(lang::to_word(formula)), formula);
}

bool in_g(const Natural& code) { return TheoryCode::from_code(code).has_value(); }

const GodelCode& falsum_code() {
  static const GodelCode kCode = lang::encode(lang::Word{
      lang::Glyph::kZero, lang::Glyph::kEquals, lang::Glyph::kSucc, lang::Glyph::kZero});
  return kCode;
}

const Term& falsum_numeral() {
  static const Term kNumeral = lang::numeral(falsum_code().value());
  return kNumeral;
}

Formula inconsistency_target(const TheoryCode& theory) {
  return Formula::exists(kVarY, lang::substitute(theory.formula(), kVarX, falsum_numeral()));
}

bool is_lottery_number(const Natural& p, const TheoryCode& theory,
                       const kernel::AxiomProfile& profile) {
  if (!lang::in_gamma(p)) return false;
  try {
    kernel::Proof proof = kernel::from_word(lang::decode(p), profile);
    if (!kernel::check(proof, profile)) return false;
    return proof.lines().back() == inconsistency_target(theory);
  } catch (const MalformedProofWord&) {
    return false;
  }
}

namespace {

class Abstractor {
 public:
  explicit Abstractor(std::size_t falsum) : falsum_(falsum) {}

  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kSuccessor:
        if (t.inner().kind() == Term::Kind::kZero) {
          if (t.successor_count() < falsum_) return t;
          ++replaced_;
          return Term::successor(Term::variable(kVarX), t.successor_count() - falsum_);
        }
        return Term::successor(term(t.inner()), t.successor_count());
      case Term::Kind::kPlus:
        return Term::plus(term(t.lhs()), term(t.rhs()));
      case Term::Kind::kTimes:
        return Term::times(term(t.lhs()), term(t.rhs()));
      case Term::Kind::kZero:
      case Term::Kind::kVariable:
        break;
    }
    return t;
  }

  Formula formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kEquals:
        return Formula::equals(term(f.left_term()), term(f.right_term()));
      case Formula::Kind::kNot:
        return Formula::negation(formula(f.operand()));
      case Formula::Kind::kImplies:
        return Formula::implies(formula(f.lhs()), formula(f.rhs()));
      case Formula::Kind::kAnd:
        return Formula::conjunction(formula(f.lhs()), formula(f.rhs()));
      case Formula::Kind::kOr:
        return Formula::disjunction(formula(f.lhs()), formula(f.rhs()));
      case Formula::Kind::kForAll:
      case Formula::Kind::kExists: {
        // Under a binder of x an abstracted occurrence would be captured.
        if (f.bound_variable() == kVarX) return f;
        Formula body = formula(f.body());
        return f.kind() == Formula::Kind::kForAll ? Formula::for_all(f.bound_variable(), body)
                                                  : Formula::exists(f.bound_variable(), body);
      }
    }
    return f;
  }

  std::size_t replaced() const { return replaced_; }

 private:
  std::size_t falsum_;
  std::size_t replaced_ = 0;
};

}  // namespace

std::optional<TheoryCode> extract_theory(const Formula& conclusion) {
  if (conclusion.kind() != Formula::Kind::kExists || conclusion.bound_variable() != kVarY) {
    return std::nullopt;
  }
  const Formula body = conclusion.body();
  if (body.free_variables() != lang::VarSet{kVarY}) return std::nullopt;
  Abstractor abstractor(falsum_code().value().get_ui());
  Formula a = abstractor.formula(body);
  if (abstractor.replaced() == 0 || a.free_variables() != lang::VarSet{kVarX, kVarY}) {
    return std::nullopt;
  }
  return TheoryCode::from_formula(a);
}

Natural evaluate(const Term& term, std::span<const Natural> assignment) {
  switch (term.kind()) {
    case Term::Kind::kZero:
      return 0;
    case Term::Kind::kVariable:
      if (term.variable_index() >= assignment.size()) {
        throw UnsupportedFormula("variable x" + std::to_string(term.variable_index()) +
                                 " has no value");
      }
      return assignment[term.variable_index()];
    case Term::Kind::kSuccessor:
      return evaluate(term.inner(), assignment) + term.successor_count();
    case Term::Kind::kPlus:
      return evaluate(term.lhs(), assignment) + evaluate(term.rhs(), assignment);
    case Term::Kind::kTimes:
      return evaluate(term.lhs(), assignment) * evaluate(term.rhs(), assignment);
  }
  return 0;
}

bool evaluate(const Formula& formula, std::span<const Natural> assignment) {
  switch (formula.kind()) {
    case Formula::Kind::kEquals:
      return evaluate(formula.left_term(), assignment) == evaluate(formula.right_term(), assignment);
    case Formula::Kind::kNot:
      return !evaluate(formula.operand(), assignment);
    case Formula::Kind::kImplies:
      return !evaluate(formula.lhs(), assignment) || evaluate(formula.rhs(), assignment);
    case Formula::Kind::kAnd:
      return evaluate(formula.lhs(), assignment) && evaluate(formula.rhs(), assignment);
    case Formula::Kind::kOr:
      return evaluate(formula.lhs(), assignment) || evaluate(formula.rhs(), assignment);
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      break;
  }
  throw UnsupportedFormula("quantifier in " + lang::to_text(formula) +
                           " is outside the bounded-evaluable fragment");
}

namespace {

bool quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      return true;
    case Formula::Kind::kNot:
      return quantifier_free(f.operand());
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      return false;
  }
  return false;
}

}  // namespace

Provability eval_provable(const TheoryCode& theory, const Formula& b, std::uint64_t fuel) {
  if (!quantifier_free(theory.formula())) {
    throw UnsupportedFormula(lang::to_text(theory.formula()) +
                             " has quantifiers; only quantifier-free A(x,y) is evaluated");
  }
  Natural values[2] = {lang::encode(lang::to_word(b)).value(), 0};
  for (std::uint64_t y = 0; y <= fuel; ++y) {
    values[kVarY] = Natural(static_cast<unsigned long>(y));
    if (evaluate(theory.formula(), values)) return Provability::kProved;
  }
  return Provability::kUnknown;
}

}  // namespace plottery::theory
