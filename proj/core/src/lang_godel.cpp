#include "plottery/lang/godel.hpp"

#include "plottery/errors.hpp"

namespace plottery::lang {
namespace {

constexpr char kDigitChars[] = "0123456789abcdefg";

std::string base17_digits(const Natural& value) {
  if (value <= 0) throw NotInGamma("0 is not the code of a word");
  std::string digits = value.get_str(static_cast<int>(kCodeBase));
  if (digits.find('0') != std::string::npos) {
    throw NotInGamma("code " + value.get_str(10) + " has a zero base-17 digit");
  }
  return digits;
}

unsigned digit_value(char c) {
  return c <= '9' ? static_cast<unsigned>(c - '0') : static_cast<unsigned>(c - 'a' + 10);
}

Natural words_shorter_than(std::size_t length) {
  // 1 + 16 + ... + 16^(length-1) = (16^length - 1) / 15
  Natural p;
  mpz_ui_pow_ui(p.get_mpz_t(), kAlphabetSize, length);
  return (p - 1) / 15;
}

}  // namespace

GodelCode::GodelCode(Natural value) : value_(std::move(value)) {
  base17_digits(value_);
}

GodelCode GodelCode::parse(std::string_view decimal) {
  return GodelCode(parse_natural(decimal));
}

bool in_gamma(const Natural& value) {
  if (value <= 0) return false;
  std::string digits = value.get_str(static_cast<int>(kCodeBase));
  return digits.find('0') == std::string::npos;
}

GodelCode encode(const Word& word) {
  if (word.empty()) throw Error("the empty word has no code");
  std::string digits;
  digits.reserve(word.size());
  for (Glyph g : word) digits.push_back(kDigitChars[glyph_index(g)]);
  return GodelCode(Natural(digits, static_cast<int>(kCodeBase)));
}

Word decode(const Natural& code) {
  std::string digits = base17_digits(code);
  std::vector<Glyph> glyphs;
  glyphs.reserve(digits.size());
  for (char c : digits) glyphs.push_back(*glyph_from_index(digit_value(c)));
  return Word(std::move(glyphs));
}

Natural rank(const Natural& code) {
  std::string digits = base17_digits(code);
  for (char& c : digits) c = kDigitChars[digit_value(c) - 1];
  return Natural(digits, 16) + words_shorter_than(digits.size());
}

GodelCode unrank(const Natural& position) {
  if (position < 1) throw Error("rank positions start at 1");
  Natural scaled = position * 15 + 1;
  std::size_t length = mpz_sizeinbase(scaled.get_mpz_t(), 16) - 1;
  Natural offset = position - words_shorter_than(length);
  std::string digits = offset.get_str(16);
  digits.insert(0, length - digits.size(), '0');
  for (char& c : digits) c = kDigitChars[digit_value(c) + 1];
  return GodelCode(Natural(digits, static_cast<int>(kCodeBase)));
}

}  // namespace plottery::lang
