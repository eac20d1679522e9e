#include "plottery/theory/mini.hpp"

#include <algorithm>

#include "plottery/errors.hpp"
#include "plottery/lang/godel.hpp"

namespace plottery::theory {

namespace {

std::vector<std::vector<Term>> mini_terms(std::size_t max_length) {
  std::vector<std::vector<Term>> by_length(max_length + 1);
  for (std::size_t length = 1; length <= max_length; ++length) {
    // S^k O and S^k x^(j) with k + 1 + j = length.
    by_length[length].push_back(lang::numeral(length - 1));
    for (std::size_t k = 0; k < length; ++k) {
      const auto index = static_cast<lang::VarIndex>(length - 1 - k);
      by_length[length].push_back(Term::successor(Term::variable(index), k));
    }
  }
  return by_length;
}

}  // namespace

std::vector<Formula> mini_formulas(std::size_t max_length) {
  const auto terms = mini_terms(max_length);
  std::vector<std::vector<Formula>> by_length(max_length + 1);
  for (std::size_t length = 3; length <= max_length; ++length) {
    auto& out = by_length[length];
    for (std::size_t left = 1; left + 2 <= length; ++left) {
      for (const Term& s : terms[left]) {
        for (const Term& t : terms[length - 1 - left]) out.push_back(Formula::equals(s, t));
      }
    }
    for (std::size_t left = 3; left + 6 <= length; ++left) {
      for (const Formula& a : by_length[left]) {
        for (const Formula& b : by_length[length - 3 - left]) {
          out.push_back(Formula::conjunction(a, b));
          out.push_back(Formula::implies(a, b));
        }
      }
    }
    for (std::size_t primes = 0; primes + 5 <= length; ++primes) {
      for (const Formula& body : by_length[length - 2 - primes]) {
        out.push_back(Formula::exists(static_cast<lang::VarIndex>(primes), body));
      }
    }
  }
  std::vector<Formula> all;
  for (auto& group : by_length) all.insert(all.end(), group.begin(), group.end());
  return all;
}

namespace {

const kernel::AxiomProfile& mini_profile() { return kernel::AxiomProfile::mini(); }

Term peel(const Term& t, std::size_t count) {
  if (count == 0) return t;
  if (t.successor_count() == count) return t.inner();
  return Term::successor(t.inner(), t.successor_count() - count);
}

bool mentions(const Term& t, lang::VarIndex v) { return lang::contains(t.free_variables(), v); }

// Unifies s and r in the single variable v. kAny: every value works.
struct Unifier {
  enum class Kind { kNone, kAny, kUnique } kind;
  std::optional<Term> value;
};

Unifier unify(const Term& s, const Term& r, lang::VarIndex v) {
  Term a = s;
  Term b = r;
  if (a.kind() == Term::Kind::kSuccessor && b.kind() == Term::Kind::kSuccessor) {
    const std::size_t common = std::min(a.successor_count(), b.successor_count());
    a = peel(a, common);
    b = peel(b, common);
  }
  if (a == b) return {Unifier::Kind::kAny, std::nullopt};
  if (a.kind() == Term::Kind::kVariable && a.variable_index() == v) {
    if (mentions(b, v)) return {Unifier::Kind::kNone, std::nullopt};
    return {Unifier::Kind::kUnique, b};
  }
  if (b.kind() == Term::Kind::kVariable && b.variable_index() == v) {
    if (mentions(a, v)) return {Unifier::Kind::kNone, std::nullopt};
    return {Unifier::Kind::kUnique, a};
  }
  if (a.kind() != b.kind() || a.kind() == Term::Kind::kSuccessor ||
      (a.kind() != Term::Kind::kPlus && a.kind() != Term::Kind::kTimes)) {
    return {Unifier::Kind::kNone, std::nullopt};
  }
  Unifier first = unify(a.lhs(), b.lhs(), v);
  if (first.kind == Unifier::Kind::kNone) return first;
  if (first.kind == Unifier::Kind::kAny) return unify(a.rhs(), b.rhs(), v);
  if (lang::substitute(a.rhs(), v, *first.value) == lang::substitute(b.rhs(), v, *first.value)) {
    return first;
  }
  return {Unifier::Kind::kNone, std::nullopt};
}

void collect_closed(const Term& t, std::vector<Term>& out) {
  if (t.is_closed()) {
    out.push_back(t);
    return;
  }
  switch (t.kind()) {
    case Term::Kind::kSuccessor:
      collect_closed(t.inner(), out);
      break;
    case Term::Kind::kPlus:
    case Term::Kind::kTimes:
      collect_closed(t.lhs(), out);
      collect_closed(t.rhs(), out);
      break;
    default:
      break;
  }
}

void collect_candidates(const Formula& f, lang::VarIndex v, std::vector<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEquals: {
      collect_closed(f.left_term(), out);
      collect_closed(f.right_term(), out);
      Unifier u = unify(f.left_term(), f.right_term(), v);
      if (u.kind == Unifier::Kind::kUnique && u.value->is_closed()) out.push_back(*u.value);
      break;
    }
    case Formula::Kind::kNot:
      collect_candidates(f.operand(), v, out);
      break;
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      collect_candidates(f.lhs(), v, out);
      collect_candidates(f.rhs(), v, out);
      break;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      if (f.bound_variable() != v) collect_candidates(f.body(), v, out);
      break;
  }
}

class Builder {
 public:
  explicit Builder(const MiniProver& prover) : prover_(prover) {}

  std::size_t build(const Formula& f) {
    if (auto existing = find(f)) return *existing;
    switch (f.kind()) {
      case Formula::Kind::kEquals:
        return add(f, kernel::AxiomInstance{"Refl"});
      case Formula::Kind::kAnd: {
        const std::size_t a = build(f.lhs());
        const std::size_t b = build(f.rhs());
        const std::size_t ax = add(
            Formula::implies(f.lhs(), Formula::implies(f.rhs(), f)), kernel::AxiomInstance{"AndIntro"});
        const std::size_t step = add(Formula::implies(f.rhs(), f), kernel::ModusPonens{a, ax});
        return add(f, kernel::ModusPonens{b, step});
      }
      case Formula::Kind::kExists:
        for (const Term& t : prover_.witness_candidates(f.bound_variable(), f.body())) {
          Formula instance = lang::substitute(f.body(), f.bound_variable(), t);
          if (!prover_.provable(instance)) continue;
          const std::size_t premise = build(instance);
          const std::size_t ax =
              add(Formula::implies(instance, f), kernel::AxiomInstance{"ExistsIntro"});
          return add(f, kernel::ModusPonens{premise, ax});
        }
        break;
      case Formula::Kind::kImplies: {
        if (const kernel::Schema* schema = mini_profile().match(f)) {
          return add(f, kernel::AxiomInstance{std::string(schema->name)});
        }
        if (prover_.provable(f.rhs())) {
          const std::size_t b = build(f.rhs());
          const std::size_t ax =
              add(Formula::implies(f.rhs(), f), kernel::AxiomInstance{"K"});
          return add(f, kernel::ModusPonens{b, ax});
        }
        const Formula c = f.rhs().lhs();
        const std::size_t premise = build(c);
        const std::size_t ax =
            add(Formula::implies(c, f), kernel::AxiomInstance{"AndIntro"});
        return add(f, kernel::ModusPonens{premise, ax});
      }
      default:
        break;
    }
    throw Error("no Mini derivation of " + lang::to_text(f));
  }

  kernel::Proof take() { return std::move(proof_); }

 private:
  std::optional<std::size_t> find(const Formula& f) const {
    const auto lines = proof_.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i] == f) return i;
    }
    return std::nullopt;
  }

  std::size_t add(const Formula& f, kernel::Justification j) {
    if (auto existing = find(f)) return *existing;
    proof_.add(f, std::move(j));
    return proof_.size() - 1;
  }

  const MiniProver& prover_;
  kernel::Proof proof_;
};

}  // namespace

std::vector<Term> MiniProver::witness_candidates(lang::VarIndex v, const Formula& body) const {
  std::vector<Term> out{Term::zero()};
  collect_candidates(body, v, out);
  std::vector<std::pair<lang::Word, Term>> keyed;
  for (const Term& t : out) {
    lang::Word w = lang::to_word(t);
    if (std::none_of(keyed.begin(), keyed.end(), [&](const auto& k) { return k.first == w; })) {
      keyed.emplace_back(std::move(w), t);
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> sorted;
  for (auto& [word, term] : keyed) sorted.push_back(term);
  return sorted;
}

bool MiniProver::provable(const Formula& goal) const {
  switch (goal.kind()) {
    case Formula::Kind::kEquals:
      return goal.left_term() == goal.right_term();
    case Formula::Kind::kAnd:
      return provable(goal.lhs()) && provable(goal.rhs());
    case Formula::Kind::kExists:
      for (const Term& t : witness_candidates(goal.bound_variable(), goal.body())) {
        if (provable(lang::substitute(goal.body(), goal.bound_variable(), t))) return true;
      }
      return false;
    case Formula::Kind::kImplies: {
      if (mini_profile().match(goal) != nullptr || provable(goal.rhs())) return true;
      const Formula b = goal.rhs();
      return b.kind() == Formula::Kind::kAnd && b.rhs() == goal.lhs() && provable(b.lhs());
    }
    default:
      return false;
  }
}

std::optional<kernel::Proof> MiniProver::prove(const Formula& goal) const {
  if (!provable(goal)) return std::nullopt;
  Builder builder(*this);
  builder.build(goal);
  return builder.take();
}

std::vector<UniverseEntry> mini_universe(std::size_t max_formula_length) {
  const MiniProver prover;
  std::vector<UniverseEntry> out;
  for (const Formula& a : mini_formulas(max_formula_length)) {
    if (a.free_variables() != lang::VarSet{kVarX, kVarY}) continue;
    TheoryCode theory = TheoryCode::from_formula(a);
    std::optional<kernel::Proof> proof = prover.prove(inconsistency_target(theory));
    if (!proof) continue;
    GodelCode code = lang::encode(kernel::to_word(*proof));
    out.push_back({std::move(theory), std::move(*proof), std::move(code)});
  }
  std::sort(out.begin(), out.end(),
            [](const UniverseEntry& a, const UniverseEntry& b) { return a.code < b.code; });
  return out;
}

}  // namespace plottery::theory
