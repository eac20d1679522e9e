#include "plottery/lang/word.hpp"

#include <algorithm>

#include "plottery/errors.hpp"

namespace plottery::lang {

Word Word::from_text(std::string_view text) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    const GlyphInfo* best = nullptr;
    std::size_t best_len = 0;
    for (const GlyphInfo& g : alphabet()) {
      for (std::string_view spelling : {g.utf8, g.ascii}) {
        if (spelling.size() > best_len && text.substr(pos, spelling.size()) == spelling) {
          best = &g;
          best_len = spelling.size();
        }
      }
    }
    if (best == nullptr) {
      throw SyntaxError("character outside the alphabet", pos);
    }
    word.push_back(best->glyph);
    pos += best_len;
  }
  return word;
}

std::string Word::to_text() const {
  std::string out;
  out.reserve(glyphs_.size() * 2);
  for (Glyph g : glyphs_) out += glyph_info(g).utf8;
  return out;
}

std::string Word::to_ascii() const {
  std::string out;
  out.reserve(glyphs_.size());
  for (Glyph g : glyphs_) out += glyph_info(g).ascii;
  return out;
}

void Word::append(const Word& other) {
  glyphs_.insert(glyphs_.end(), other.glyphs_.begin(), other.glyphs_.end());
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = glyphs_.size() <=> other.glyphs_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      glyphs_.begin(), glyphs_.end(), other.glyphs_.begin(), other.glyphs_.end(),
      [](Glyph a, Glyph b) { return glyph_index(a) <=> glyph_index(b); });
}

}  // namespace plottery::lang
