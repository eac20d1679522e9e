#include "plottery/lang/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "plottery/errors.hpp"
#include "plottery/lang/godel.hpp"

namespace plottery::lang {
namespace {

struct Token {
  enum class Kind { kGlyph, kVariable, kNumeral, kEnd };
  Kind kind = Kind::kEnd;
  Glyph glyph = Glyph::kZero;
  VarIndex var = 0;
  std::size_t numeral = 0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize_word(const Word& word) {
  std::vector<Token> tokens;
  tokens.reserve(word.size() + 1);
  for (std::size_t i = 0; i < word.size();) {
    Token t;
    t.pos = i;
    if (word[i] == Glyph::kVar) {
      std::size_t j = i + 1;
      while (j < word.size() && word[j] == Glyph::kPrime) ++j;
      t.kind = Token::Kind::kVariable;
      t.var = static_cast<VarIndex>(j - i - 1);
      i = j;
    } else {
      t.kind = Token::Kind::kGlyph;
      t.glyph = word[i];
      ++i;
    }
    tokens.push_back(t);
  }
  tokens.push_back(Token{Token::Kind::kEnd, Glyph::kZero, 0, 0, word.size()});
  return tokens;
}

bool starts_with(std::string_view text, std::size_t pos, std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

std::size_t to_count(const Natural& value, std::size_t pos) {
  if (!value.fits_ulong_p()) throw SyntaxError("numeral too large", pos);
  return value.get_ui();
}

std::vector<Token> tokenize_text(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  auto read_digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return text.substr(start, p - start);
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
      continue;
    }
    Token t;
    t.pos = pos;
    if (c == 'x') {
      ++pos;
      t.kind = Token::Kind::kVariable;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string_view digits = read_digits(pos);
        t.var = static_cast<VarIndex>(to_count(parse_natural(digits), t.pos));
      } else {
        VarIndex primes = 0;
        while (true) {
          if (starts_with(text, pos, "′")) {
            pos += std::string_view("′").size();
          } else if (starts_with(text, pos, "'")) {
            ++pos;
          } else {
            break;
          }
          ++primes;
        }
        t.var = primes;
      }
    } else if (c == 'y') {
      ++pos;
      t.kind = Token::Kind::kVariable;
      t.var = 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::kNumeral;
      t.numeral = to_count(parse_natural(read_digits(pos)), t.pos);
    } else if (c == '{') {
      ++pos;
      std::string_view digits = read_digits(pos);
      if (digits.empty() || pos >= text.size() || text[pos] != '}') {
        throw SyntaxError("malformed numeral, expected {digits}", t.pos);
      }
      ++pos;
      t.kind = Token::Kind::kNumeral;
      t.numeral = to_count(parse_natural(digits), t.pos);
    } else if (starts_with(text, pos, "⌈")) {
      pos += std::string_view("⌈").size();
      std::size_t close = text.find("⌉", pos);
      if (close == std::string_view::npos) throw SyntaxError("unterminated ⌈", t.pos);
      Word inner = Word::from_text(text.substr(pos, close - pos));
      if (inner.empty()) throw SyntaxError("empty ⌈⌉", t.pos);
      pos = close + std::string_view("⌉").size();
      t.kind = Token::Kind::kNumeral;
      t.numeral = to_count(encode(inner).value(), t.pos);
    } else {
      const GlyphInfo* best = nullptr;
      std::size_t best_len = 0;
      for (const GlyphInfo& g : alphabet()) {
        for (std::string_view spelling : {g.utf8, g.ascii}) {
          if (spelling.size() > best_len && starts_with(text, pos, spelling)) {
            best = &g;
            best_len = spelling.size();
          }
        }
      }
      if (best == nullptr) throw SyntaxError("unexpected character", pos);
      t.kind = Token::Kind::kGlyph;
      t.glyph = best->glyph;
      pos += best_len;
    }
    tokens.push_back(t);
  }
  tokens.push_back(Token{Token::Kind::kEnd, Glyph::kZero, 0, 0, text.size()});
  return tokens;
}

/// Recursive descent over either token stream. Failure is signalled by
/// std::nullopt so the '(' ambiguity between a term and a formula can be
/// resolved by backtracking without exceptions.
class Parser {
 public:
  Parser(std::vector<Token> tokens, bool strict) : tokens_(std::move(tokens)), strict_(strict) {}

  std::optional<Formula> formula_or_nothing() {
    std::optional<Formula> f = strict_ ? strict_formula() : implication();
    if (f && peek().kind != Token::Kind::kEnd) {
      fail("unexpected trailing input");
      return std::nullopt;
    }
    return f;
  }

  Formula formula_to_end() {
    std::optional<Formula> f = formula_or_nothing();
    if (!f) raise();
    return *f;
  }

  Term term_to_end() {
    std::optional<Term> t = strict_ ? strict_term() : sum();
    if (t && peek().kind != Token::Kind::kEnd) fail("unexpected trailing input");
    if (!t || peek().kind != Token::Kind::kEnd) raise();
    return *t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool at_glyph(Glyph g) const {
    return peek().kind == Token::Kind::kGlyph && peek().glyph == g;
  }

  bool accept(Glyph g) {
    if (!at_glyph(g)) return false;
    ++pos_;
    return true;
  }

  void fail(const char* message) {
    if (!error_ || peek().pos >= error_pos_) {
      error_ = message;
      error_pos_ = peek().pos;
    }
  }

  [[noreturn]] void raise() const {
    throw SyntaxError(error_ ? error_ : "syntax error", error_pos_);
  }

  std::optional<VarIndex> variable() {
    if (peek().kind != Token::Kind::kVariable) {
      fail("expected a variable");
      return std::nullopt;
    }
    return tokens_[pos_++].var;
  }

  std::optional<Formula> binary(Formula::Kind kind, const Formula& lhs, const Formula& rhs) {
    switch (kind) {
      case Formula::Kind::kImplies:
        return Formula::implies(lhs, rhs);
      case Formula::Kind::kAnd:
        return Formula::conjunction(lhs, rhs);
      default:
        return Formula::disjunction(lhs, rhs);
    }
  }

  std::optional<Formula::Kind> connective() {
    if (accept(Glyph::kImplies)) return Formula::Kind::kImplies;
    if (accept(Glyph::kAnd)) return Formula::Kind::kAnd;
    if (accept(Glyph::kOr)) return Formula::Kind::kOr;
    fail("expected a connective");
    return std::nullopt;
  }

  std::optional<Formula> quantified(bool for_all, bool strict) {
    std::optional<VarIndex> v = variable();
    if (!v) return std::nullopt;
    std::optional<Formula> body = strict ? strict_formula() : unary();
    if (!body) return std::nullopt;
    return for_all ? Formula::for_all(*v, *body) : Formula::exists(*v, *body);
  }

  std::optional<Formula> equation(bool strict) {
    std::optional<Term> lhs = strict ? strict_term() : sum();
    if (!lhs) return std::nullopt;
    if (!accept(Glyph::kEquals)) {
      fail("expected '='");
      return std::nullopt;
    }
    std::optional<Term> rhs = strict ? strict_term() : sum();
    if (!rhs) return std::nullopt;
    return Formula::equals(*lhs, *rhs);
  }

  // ---- canonical grammar -------------------------------------------------

  std::optional<Formula> strict_formula() {
    if (accept(Glyph::kNot)) {
      std::optional<Formula> f = strict_formula();
      if (!f) return std::nullopt;
      return Formula::negation(*f);
    }
    if (accept(Glyph::kForAll)) return quantified(true, true);
    if (accept(Glyph::kExists)) return quantified(false, true);
    if (at_glyph(Glyph::kLParen)) {
      std::size_t save = pos_;
      if (std::optional<Formula> eq = equation(true)) return eq;
      pos_ = save;
      ++pos_;
      std::optional<Formula> lhs = strict_formula();
      if (!lhs) return std::nullopt;
      std::optional<Formula::Kind> kind = connective();
      if (!kind) return std::nullopt;
      std::optional<Formula> rhs = strict_formula();
      if (!rhs) return std::nullopt;
      if (!accept(Glyph::kRParen)) {
        fail("expected ')'");
        return std::nullopt;
      }
      return binary(*kind, *lhs, *rhs);
    }
    return equation(true);
  }

  std::optional<Term> strict_term() {
    std::size_t successors = 0;
    while (accept(Glyph::kSucc)) ++successors;
    std::optional<Term> base;
    if (accept(Glyph::kZero)) {
      base = Term::zero();
    } else if (peek().kind == Token::Kind::kVariable) {
      base = Term::variable(tokens_[pos_++].var);
    } else if (accept(Glyph::kLParen)) {
      std::optional<Term> lhs = strict_term();
      if (!lhs) return std::nullopt;
      bool is_plus = false;
      if (accept(Glyph::kPlus)) {
        is_plus = true;
      } else if (!accept(Glyph::kTimes)) {
        fail("expected '+' or '·'");
        return std::nullopt;
      }
      std::optional<Term> rhs = strict_term();
      if (!rhs) return std::nullopt;
      if (!accept(Glyph::kRParen)) {
        fail("expected ')'");
        return std::nullopt;
      }
      base = is_plus ? Term::plus(*lhs, *rhs) : Term::times(*lhs, *rhs);
    } else {
      fail("expected a term");
      return std::nullopt;
    }
    return Term::successor(*base, successors);
  }

  // ---- surface grammar ---------------------------------------------------

  std::optional<Formula> implication() {
    std::optional<Formula> lhs = disjunction();
    if (!lhs) return std::nullopt;
    if (!accept(Glyph::kImplies)) return lhs;
    std::optional<Formula> rhs = implication();
    if (!rhs) return std::nullopt;
    return Formula::implies(*lhs, *rhs);
  }

  std::optional<Formula> disjunction() {
    std::optional<Formula> acc = conjunction();
    while (acc && accept(Glyph::kOr)) {
      std::optional<Formula> rhs = conjunction();
      if (!rhs) return std::nullopt;
      acc = Formula::disjunction(*acc, *rhs);
    }
    return acc;
  }

  std::optional<Formula> conjunction() {
    std::optional<Formula> acc = unary();
    while (acc && accept(Glyph::kAnd)) {
      std::optional<Formula> rhs = unary();
      if (!rhs) return std::nullopt;
      acc = Formula::conjunction(*acc, *rhs);
    }
    return acc;
  }

  std::optional<Formula> unary() {
    if (accept(Glyph::kNot)) {
      std::optional<Formula> f = unary();
      if (!f) return std::nullopt;
      return Formula::negation(*f);
    }
    if (accept(Glyph::kForAll)) return quantified(true, false);
    if (accept(Glyph::kExists)) return quantified(false, false);
    if (at_glyph(Glyph::kLParen)) {
      std::size_t save = pos_;
      if (std::optional<Formula> eq = equation(false)) return eq;
      pos_ = save;
      ++pos_;
      std::optional<Formula> inner = implication();
      if (!inner) return std::nullopt;
      if (!accept(Glyph::kRParen)) {
        fail("expected ')'");
        return std::nullopt;
      }
      return inner;
    }
    return equation(false);
  }

  std::optional<Term> sum() {
    std::optional<Term> acc = product();
    while (acc && accept(Glyph::kPlus)) {
      std::optional<Term> rhs = product();
      if (!rhs) return std::nullopt;
      acc = Term::plus(*acc, *rhs);
    }
    return acc;
  }

  std::optional<Term> product() {
    std::optional<Term> acc = prefix();
    while (acc && accept(Glyph::kTimes)) {
      std::optional<Term> rhs = prefix();
      if (!rhs) return std::nullopt;
      acc = Term::times(*acc, *rhs);
    }
    return acc;
  }

  std::optional<Term> prefix() {
    std::size_t successors = 0;
    while (accept(Glyph::kSucc)) ++successors;
    std::optional<Term> base;
    if (accept(Glyph::kZero)) {
      base = Term::zero();
    } else if (peek().kind == Token::Kind::kVariable) {
      base = Term::variable(tokens_[pos_++].var);
    } else if (peek().kind == Token::Kind::kNumeral) {
      base = numeral(tokens_[pos_++].numeral);
    } else if (accept(Glyph::kLParen)) {
      base = sum();
      if (!base) return std::nullopt;
      if (!accept(Glyph::kRParen)) {
        fail("expected ')'");
        return std::nullopt;
      }
    } else {
      fail("expected a term");
      return std::nullopt;
    }
    return Term::successor(*base, successors);
  }

  std::vector<Token> tokens_;
  bool strict_;
  std::size_t pos_ = 0;
  const char* error_ = nullptr;
  std::size_t error_pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(tokenize_text(text), false).formula_to_end();
}

Term parse_term(std::string_view text) { return Parser(tokenize_text(text), false).term_to_end(); }

Formula parse_word(const Word& word) { return Parser(tokenize_word(word), true).formula_to_end(); }

std::optional<Formula> try_parse_word(const Word& word) {
  return Parser(tokenize_word(word), true).formula_or_nothing();
}

}  // namespace plottery::lang
