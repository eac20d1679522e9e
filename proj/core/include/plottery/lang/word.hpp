#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plottery/lang/alphabet.hpp"

namespace plottery::lang {

/// A finite glyph sequence, not necessarily well formed.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Glyph> glyphs) : glyphs_(std::move(glyphs)) {}
  Word(std::initializer_list<Glyph> glyphs) : glyphs_(glyphs) {}

  /// Reads raw glyphs; accepts the Unicode spelling or the ASCII fallback
  /// of each glyph and ignores whitespace. Throws SyntaxError on any
  /// character outside the alphabet.
  static Word from_text(std::string_view text);

  std::string to_text() const;
  std::string to_ascii() const;

  std::span<const Glyph> glyphs() const { return glyphs_; }
  std::size_t size() const { return glyphs_.size(); }
  bool empty() const { return glyphs_.empty(); }
  Glyph operator[](std::size_t i) const { return glyphs_[i]; }

  void push_back(Glyph g) { glyphs_.push_back(g); }
  void append(const Word& other);
  void reserve(std::size_t n) { glyphs_.reserve(n); }

  auto begin() const { return glyphs_.begin(); }
  auto end() const { return glyphs_.end(); }

  bool operator==(const Word&) const = default;

  /// Code order: shorter words first, then lexicographic by glyph index.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<Glyph> glyphs_;
};

}  // namespace plottery::lang
