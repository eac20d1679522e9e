#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace plottery::lang {

/// Glyphs of L. The enumerator value is the glyph's 1-based alphabet index,
/// which is its digit in the Goedel numbering. Reordering breaks every
/// stored code; bump kAlphabetVersion if this ever changes.
enum class Glyph : std::uint8_t {
  kZero = 1,   // O
  kSucc,       // S
  kPlus,       // +
  kTimes,      // ·
  kEquals,     // =
  kLParen,     // (
  kRParen,     // )
  kNot,        // ¬
  kImplies,    // →
  kAnd,        // ∧
  kOr,         // ∨
  kForAll,     // ∀
  kExists,     // ∃
  kVar,        // x
  kPrime,      // ′
  kComma,      // ,
};

inline constexpr std::size_t kAlphabetSize = 16;
inline constexpr unsigned kCodeBase = kAlphabetSize + 1;
inline constexpr int kAlphabetVersion = 1;

struct GlyphInfo {
  Glyph glyph;
  std::string_view utf8;
  std::string_view ascii;
  std::string_view name;
};

std::span<const GlyphInfo> alphabet();

const GlyphInfo& glyph_info(Glyph glyph);

constexpr unsigned glyph_index(Glyph glyph) {
  return static_cast<unsigned>(glyph);
}

std::optional<Glyph> glyph_from_index(unsigned index);

/// The versioned alphabet asset (data/alphabet-v1.txt) as text.
std::string alphabet_table();

}  // namespace plottery::lang
