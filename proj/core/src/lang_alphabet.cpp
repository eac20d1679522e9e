#include "plottery/lang/alphabet.hpp"

#include <array>
#include <sstream>

namespace plottery::lang {
namespace {

constexpr std::array<GlyphInfo, kAlphabetSize> kGlyphs{{
    {Glyph::kZero, "O", "O", "zero"},
    {Glyph::kSucc, "S", "S", "successor"},
    {Glyph::kPlus, "+", "+", "plus"},
    {Glyph::kTimes, "·", "*", "times"},
    {Glyph::kEquals, "=", "=", "equals"},
    {Glyph::kLParen, "(", "(", "lparen"},
    {Glyph::kRParen, ")", ")", "rparen"},
    {Glyph::kNot, "¬", "~", "not"},
    {Glyph::kImplies, "→", "->", "implies"},
    {Glyph::kAnd, "∧", "&", "and"},
    {Glyph::kOr, "∨", "|", "or"},
    {Glyph::kForAll, "∀", "A", "forall"},
    {Glyph::kExists, "∃", "E", "exists"},
    {Glyph::kVar, "x", "x", "variable"},
    {Glyph::kPrime, "′", "'", "prime"},
    {Glyph::kComma, ",", ",", "comma"},
}};

}  // namespace

std::span<const GlyphInfo> alphabet() { return kGlyphs; }

const GlyphInfo& glyph_info(Glyph glyph) {
  return kGlyphs[glyph_index(glyph) - 1];
}

std::optional<Glyph> glyph_from_index(unsigned index) {
  if (index < 1 || index > kAlphabetSize) return std::nullopt;
  return static_cast<Glyph>(index);
}

std::string alphabet_table() {
  std::ostringstream out;
  out << "# plottery alphabet v" << kAlphabetVersion << "\n";
  out << "# index\tglyph\tascii\tname\n";
  for (const GlyphInfo& g : kGlyphs) {
    out << glyph_index(g.glyph) << '\t' << g.utf8 << '\t' << g.ascii << '\t'
        << g.name << '\n';
  }
  return out.str();
}

}  // namespace plottery::lang
