#pragma once

#include <compare>
#include <string>

#include "plottery/lang/word.hpp"
#include "plottery/natural.hpp"

namespace plottery::lang {

/// A member of Gamma: the code of some nonempty word. Codes are read as
/// base-17 numerals whose digits are glyph indices, so membership is
/// exactly "no zero digit".
class GodelCode {
 public:
  /// The code of the one-glyph word O.
  GodelCode() : value_(1) {}
  /// Throws NotInGamma unless `value` is zero-free in base 17.
  explicit GodelCode(Natural value);

  static GodelCode parse(std::string_view decimal);

  const Natural& value() const { return value_; }
  std::string to_string() const { return value_.get_str(10); }

  bool operator==(const GodelCode& other) const { return value_ == other.value_; }
  std::strong_ordering operator<=>(const GodelCode& other) const {
    int c = cmp(value_, other.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Natural value_;
};

bool in_gamma(const Natural& value);

/// The empty word has no code; encoding it throws plottery::Error.
GodelCode encode(const Word& word);

/// Throws NotInGamma.
Word decode(const Natural& code);
inline Word decode(const GodelCode& code) { return decode(code.value()); }

/// 1-based position of `code` among Gamma in increasing order. Equals the
/// code's digit string read as a bijective base-16 numeral.
Natural rank(const Natural& code);
inline Natural rank(const GodelCode& code) { return rank(code.value()); }

/// Inverse of rank; `position` must be >= 1.
GodelCode unrank(const Natural& position);

}  // namespace plottery::lang
