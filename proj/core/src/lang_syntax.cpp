#include "plottery/lang/syntax.hpp"

#include <algorithm>

#include "plottery/errors.hpp"

namespace plottery::lang {

bool contains(const VarSet& set, VarIndex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

namespace {

VarSet merge(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet without(const VarSet& a, VarIndex v) {
  VarSet out;
  out.reserve(a.size());
  std::copy_if(a.begin(), a.end(), std::back_inserter(out), [v](VarIndex w) { return w != v; });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind;
  VarIndex var = 0;
  std::size_t count = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  VarSet free;
  std::size_t glyphs = 0;
};

namespace {

using TermNode = Term::Node;
using TermNodePtr = std::shared_ptr<const TermNode>;

bool equal_terms(const TermNode* a, const TermNode* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->glyphs != b->glyphs) return false;
  switch (a->kind) {
    case Term::Kind::kZero:
      return true;
    case Term::Kind::kVariable:
      return a->var == b->var;
    case Term::Kind::kSuccessor:
      return a->count == b->count && equal_terms(a->a.get(), b->a.get());
    case Term::Kind::kPlus:
    case Term::Kind::kTimes:
      return equal_terms(a->a.get(), b->a.get()) && equal_terms(a->b.get(), b->b.get());
  }
  return false;
}

}  // namespace

Term Term::zero() {
  static const Term kZeroTerm(std::make_shared<const Node>(Node{Kind::kZero, 0, 0, {}, {}, {}, 1}));
  return kZeroTerm;
}

Term Term::variable(VarIndex index) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVariable, index, 0, {}, {}, VarSet{index}, 1 + static_cast<std::size_t>(index)}));
}

Term Term::successor(const Term& inner, std::size_t count) {
  if (count == 0) return inner;
  if (inner.kind() == Kind::kSuccessor) {
    return successor(inner.inner(), count + inner.successor_count());
  }
  return Term(std::make_shared<const Node>(Node{Kind::kSuccessor, 0, count, inner.node_, {},
                                                inner.free_variables(),
                                                count + inner.glyph_length()}));
}

Term Term::plus(const Term& lhs, const Term& rhs) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kPlus, 0, 0, lhs.node_, rhs.node_, merge(lhs.free_variables(), rhs.free_variables()),
           3 + lhs.glyph_length() + rhs.glyph_length()}));
}

Term Term::times(const Term& lhs, const Term& rhs) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kTimes, 0, 0, lhs.node_, rhs.node_, merge(lhs.free_variables(), rhs.free_variables()),
           3 + lhs.glyph_length() + rhs.glyph_length()}));
}

Term::Kind Term::kind() const { return node_->kind; }
VarIndex Term::variable_index() const { return node_->var; }
std::size_t Term::successor_count() const { return node_->count; }
Term Term::inner() const { return Term(node_->a); }
Term Term::lhs() const { return Term(node_->a); }
Term Term::rhs() const { return Term(node_->b); }
const VarSet& Term::free_variables() const { return node_->free; }
std::size_t Term::glyph_length() const { return node_->glyphs; }

bool operator==(const Term& a, const Term& b) { return equal_terms(a.node_.get(), b.node_.get()); }

Term numeral(std::size_t n) { return Term::successor(Term::zero(), n); }

Term numeral(const Natural& n) {
  if (n < 0 || !n.fits_ulong_p()) throw Error("numeral too large to represent: " + n.get_str());
  return numeral(static_cast<std::size_t>(n.get_ui()));
}

std::optional<std::size_t> numeral_value(const Term& term) {
  if (term.kind() == Term::Kind::kZero) return 0;
  if (term.kind() == Term::Kind::kSuccessor && term.inner().kind() == Term::Kind::kZero) {
    return term.successor_count();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  VarIndex var = 0;
  TermNodePtr left_term;
  TermNodePtr right_term;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  VarSet free;
  std::size_t glyphs = 0;
  std::size_t nodes = 0;
};

namespace {

using FormulaNode = Formula::Node;

bool equal_formulas(const FormulaNode* a, const FormulaNode* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->glyphs != b->glyphs || a->nodes != b->nodes) return false;
  switch (a->kind) {
    case Formula::Kind::kEquals:
      return equal_terms(a->left_term.get(), b->left_term.get()) &&
             equal_terms(a->right_term.get(), b->right_term.get());
    case Formula::Kind::kNot:
      return equal_formulas(a->a.get(), b->a.get());
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return equal_formulas(a->a.get(), b->a.get()) && equal_formulas(a->b.get(), b->b.get());
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      return a->var == b->var && equal_formulas(a->a.get(), b->a.get());
  }
  return false;
}

}  // namespace

Formula Formula::equals(const Term& lhs, const Term& rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kEquals, 0, lhs.node_, rhs.node_, {}, {},
           merge(lhs.free_variables(), rhs.free_variables()),
           lhs.glyph_length() + rhs.glyph_length() + 1, 1}));
}

Formula Formula::negation(const Formula& operand) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, 0, {}, {}, operand.node_, {}, operand.free_variables(),
           operand.glyph_length() + 1, operand.size() + 1}));
}

Formula Formula::implies(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kImplies, 0, {}, {}, lhs.node_, rhs.node_,
           merge(lhs.free_variables(), rhs.free_variables()),
           lhs.glyph_length() + rhs.glyph_length() + 3, lhs.size() + rhs.size() + 1}));
}

Formula Formula::conjunction(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAnd, 0, {}, {}, lhs.node_, rhs.node_,
           merge(lhs.free_variables(), rhs.free_variables()),
           lhs.glyph_length() + rhs.glyph_length() + 3, lhs.size() + rhs.size() + 1}));
}

Formula Formula::disjunction(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kOr, 0, {}, {}, lhs.node_, rhs.node_,
           merge(lhs.free_variables(), rhs.free_variables()),
           lhs.glyph_length() + rhs.glyph_length() + 3, lhs.size() + rhs.size() + 1}));
}

Formula Formula::for_all(VarIndex variable, const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kForAll, variable, {}, {}, body.node_, {}, without(body.free_variables(), variable),
           body.glyph_length() + 2 + variable, body.size() + 1}));
}

Formula Formula::exists(VarIndex variable, const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kExists, variable, {}, {}, body.node_, {}, without(body.free_variables(), variable),
           body.glyph_length() + 2 + variable, body.size() + 1}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  return node_->kind == Kind::kImplies || node_->kind == Kind::kAnd || node_->kind == Kind::kOr;
}

bool Formula::is_quantifier() const {
  return node_->kind == Kind::kForAll || node_->kind == Kind::kExists;
}

Term Formula::left_term() const { return Term(node_->left_term); }
Term Formula::right_term() const { return Term(node_->right_term); }
Formula Formula::operand() const { return Formula(node_->a); }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }
VarIndex Formula::bound_variable() const { return node_->var; }
Formula Formula::body() const { return Formula(node_->a); }
const VarSet& Formula::free_variables() const { return node_->free; }
std::size_t Formula::glyph_length() const { return node_->glyphs; }
std::size_t Formula::size() const { return node_->nodes; }

bool operator==(const Formula& a, const Formula& b) {
  return equal_formulas(a.node_.get(), b.node_.get());
}

// ---------------------------------------------------------------------------
// Variables and substitution

namespace {

void max_var_term(const Term& t, std::optional<VarIndex>& best) {
  switch (t.kind()) {
    case Term::Kind::kZero:
      return;
    case Term::Kind::kVariable:
      if (!best || t.variable_index() > *best) best = t.variable_index();
      return;
    case Term::Kind::kSuccessor:
      max_var_term(t.inner(), best);
      return;
    case Term::Kind::kPlus:
    case Term::Kind::kTimes:
      max_var_term(t.lhs(), best);
      max_var_term(t.rhs(), best);
      return;
  }
}

void max_var_formula(const Formula& f, std::optional<VarIndex>& best) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      max_var_term(f.left_term(), best);
      max_var_term(f.right_term(), best);
      return;
    case Formula::Kind::kNot:
      max_var_formula(f.operand(), best);
      return;
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      max_var_formula(f.lhs(), best);
      max_var_formula(f.rhs(), best);
      return;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      if (!best || f.bound_variable() > *best) best = f.bound_variable();
      max_var_formula(f.body(), best);
      return;
  }
}

Formula rebuild_binary(Formula::Kind kind, const Formula& lhs, const Formula& rhs) {
  switch (kind) {
    case Formula::Kind::kImplies:
      return Formula::implies(lhs, rhs);
    case Formula::Kind::kAnd:
      return Formula::conjunction(lhs, rhs);
    default:
      return Formula::disjunction(lhs, rhs);
  }
}

Formula rebuild_quantifier(Formula::Kind kind, VarIndex v, const Formula& body) {
  return kind == Formula::Kind::kForAll ? Formula::for_all(v, body) : Formula::exists(v, body);
}

}  // namespace

std::optional<VarIndex> max_variable(const Formula& f) {
  std::optional<VarIndex> best;
  max_var_formula(f, best);
  return best;
}

Term substitute(const Term& term, VarIndex variable, const Term& replacement) {
  if (!contains(term.free_variables(), variable)) return term;
  switch (term.kind()) {
    case Term::Kind::kVariable:
      return replacement;
    case Term::Kind::kSuccessor:
      return Term::successor(substitute(term.inner(), variable, replacement),
                             term.successor_count());
    case Term::Kind::kPlus:
      return Term::plus(substitute(term.lhs(), variable, replacement),
                        substitute(term.rhs(), variable, replacement));
    case Term::Kind::kTimes:
      return Term::times(substitute(term.lhs(), variable, replacement),
                         substitute(term.rhs(), variable, replacement));
    case Term::Kind::kZero:
      break;
  }
  return term;
}

Formula substitute(const Formula& formula, VarIndex variable, const Term& replacement) {
  if (!contains(formula.free_variables(), variable)) return formula;
  switch (formula.kind()) {
    case Formula::Kind::kEquals:
      return Formula::equals(substitute(formula.left_term(), variable, replacement),
                             substitute(formula.right_term(), variable, replacement));
    case Formula::Kind::kNot:
      return Formula::negation(substitute(formula.operand(), variable, replacement));
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return rebuild_binary(formula.kind(), substitute(formula.lhs(), variable, replacement),
                            substitute(formula.rhs(), variable, replacement));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists: {
      VarIndex bound = formula.bound_variable();
      Formula body = formula.body();
      if (contains(replacement.free_variables(), bound)) {
        VarIndex fresh = std::max(variable, bound);
        if (auto m = max_variable(body)) fresh = std::max(fresh, *m);
        for (VarIndex v : replacement.free_variables()) fresh = std::max(fresh, v);
        ++fresh;
        body = substitute(body, bound, Term::variable(fresh));
        bound = fresh;
      }
      return rebuild_quantifier(formula.kind(), bound, substitute(body, variable, replacement));
    }
  }
  return formula;
}

bool free_for(const Formula& formula, VarIndex variable, const Term& replacement) {
  if (!contains(formula.free_variables(), variable)) return true;
  switch (formula.kind()) {
    case Formula::Kind::kEquals:
      return true;
    case Formula::Kind::kNot:
      return free_for(formula.operand(), variable, replacement);
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return free_for(formula.lhs(), variable, replacement) &&
             free_for(formula.rhs(), variable, replacement);
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      if (contains(replacement.free_variables(), formula.bound_variable())) return false;
      return free_for(formula.body(), variable, replacement);
  }
  return true;
}

namespace {

class SubstitutionMatcher {
 public:
  SubstitutionMatcher(VarIndex variable, std::optional<Term>& witness)
      : variable_(variable), witness_(witness) {}

  bool formulas(const Formula& p, const Formula& t) {
    if (!contains(p.free_variables(), variable_)) return p == t;
    if (p.kind() != t.kind()) return false;
    switch (p.kind()) {
      case Formula::Kind::kEquals:
        return terms(p.left_term(), t.left_term()) && terms(p.right_term(), t.right_term());
      case Formula::Kind::kNot:
        return formulas(p.operand(), t.operand());
      case Formula::Kind::kImplies:
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr:
        return formulas(p.lhs(), t.lhs()) && formulas(p.rhs(), t.rhs());
      case Formula::Kind::kForAll:
      case Formula::Kind::kExists: {
        if (p.bound_variable() != t.bound_variable()) return false;
        bound_.push_back(p.bound_variable());
        bool ok = formulas(p.body(), t.body());
        bound_.pop_back();
        return ok;
      }
    }
    return false;
  }

 private:
  bool terms(const Term& p, const Term& t) {
    if (!contains(p.free_variables(), variable_)) return p == t;
    switch (p.kind()) {
      case Term::Kind::kVariable:
        return assign(t);
      case Term::Kind::kSuccessor: {
        Term inner = p.inner();
        std::size_t count = p.successor_count();
        if (inner.kind() == Term::Kind::kVariable) {
          // S^c x against S^d r with d >= c binds x to S^(d-c) r.
          if (t.kind() != Term::Kind::kSuccessor || t.successor_count() < count) return false;
          return assign(Term::successor(t.inner(), t.successor_count() - count));
        }
        if (t.kind() != Term::Kind::kSuccessor || t.successor_count() != count) return false;
        return terms(inner, t.inner());
      }
      case Term::Kind::kPlus:
      case Term::Kind::kTimes:
        if (p.kind() != t.kind()) return false;
        return terms(p.lhs(), t.lhs()) && terms(p.rhs(), t.rhs());
      case Term::Kind::kZero:
        break;
    }
    return false;
  }

  bool assign(const Term& candidate) {
    for (VarIndex v : candidate.free_variables()) {
      if (std::find(bound_.begin(), bound_.end(), v) != bound_.end()) return false;
    }
    if (witness_) return *witness_ == candidate;
    witness_ = candidate;
    return true;
  }

  VarIndex variable_;
  std::optional<Term>& witness_;
  std::vector<VarIndex> bound_;
};

}  // namespace

bool match_substitution(const Formula& pattern, VarIndex variable, const Formula& target,
                        std::optional<Term>& witness) {
  witness.reset();
  SubstitutionMatcher matcher(variable, witness);
  return matcher.formulas(pattern, target);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_variable(Word& out, VarIndex v) {
  out.push_back(Glyph::kVar);
  for (VarIndex i = 0; i < v; ++i) out.push_back(Glyph::kPrime);
}

void append_term(Word& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kZero:
      out.push_back(Glyph::kZero);
      return;
    case Term::Kind::kVariable:
      append_variable(out, t.variable_index());
      return;
    case Term::Kind::kSuccessor:
      for (std::size_t i = 0; i < t.successor_count(); ++i) out.push_back(Glyph::kSucc);
      append_term(out, t.inner());
      return;
    case Term::Kind::kPlus:
    case Term::Kind::kTimes:
      out.push_back(Glyph::kLParen);
      append_term(out, t.lhs());
      out.push_back(t.kind() == Term::Kind::kPlus ? Glyph::kPlus : Glyph::kTimes);
      append_term(out, t.rhs());
      out.push_back(Glyph::kRParen);
      return;
  }
}

Glyph connective_glyph(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kImplies:
      return Glyph::kImplies;
    case Formula::Kind::kAnd:
      return Glyph::kAnd;
    default:
      return Glyph::kOr;
  }
}

void append_formula(Word& out, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      append_term(out, f.left_term());
      out.push_back(Glyph::kEquals);
      append_term(out, f.right_term());
      return;
    case Formula::Kind::kNot:
      out.push_back(Glyph::kNot);
      append_formula(out, f.operand());
      return;
    case Formula::Kind::kImplies:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      out.push_back(Glyph::kLParen);
      append_formula(out, f.lhs());
      out.push_back(connective_glyph(f.kind()));
      append_formula(out, f.rhs());
      out.push_back(Glyph::kRParen);
      return;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      out.push_back(f.kind() == Formula::Kind::kForAll ? Glyph::kForAll : Glyph::kExists);
      append_variable(out, f.bound_variable());
      append_formula(out, f.body());
      return;
  }
}

}  // namespace

Word to_word(const Term& term) {
  Word out;
  out.reserve(term.glyph_length());
  append_term(out, term);
  return out;
}

Word to_word(const Formula& formula) {
  Word out;
  out.reserve(formula.glyph_length());
  append_formula(out, formula);
  return out;
}

std::string to_text(const Term& term) { return to_word(term).to_text(); }
std::string to_text(const Formula& formula) { return to_word(formula).to_text(); }

}  // namespace plottery::lang
