#pragma once

#include <optional>
#include <string_view>

#include "plottery/lang/syntax.hpp"
#include "plottery/lang/word.hpp"

namespace plottery::lang {

/// Surface syntax (see docs/syntax.md): Unicode or ASCII connectives,
/// precedence ¬ > ∧ > ∨ > → (right associative), optional parentheses,
/// variables x, y, x0, x1, x′′, numerals 7, {7} and ⌈O=SO⌉.
/// Throws SyntaxError with the offending byte offset.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

/// Canonical glyph grammar: every binary connective and binary term is
/// parenthesized, so each formula has exactly one word and
/// to_word(parse_word(w)) == w. Throws SyntaxError with a glyph offset.
Formula parse_word(const Word& word);
std::optional<Formula> try_parse_word(const Word& word);

}  // namespace plottery::lang
