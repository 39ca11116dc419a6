#ifndef CLAUSAL_UNICODE_HPP
#define CLAUSAL_UNICODE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clausal {

using CodePoint = char32_t;

// Thrown on malformed UTF-8; byte_offset points at the offending byte.
class EncodingError : public std::runtime_error {
 public:
  EncodingError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

std::vector<CodePoint> utf8_decode(std::string_view text);
std::string utf8_encode(const std::vector<CodePoint>& cps);
void utf8_append(std::string& out, CodePoint cp);

// Canonical composition for the pairs that occur in Cyrillic and common
// Latin text (й, ї, ё, ў, accented Latin vowels). Not a full NFC
// implementation; already-composed input passes through unchanged.
std::vector<CodePoint> compose_nfc(std::vector<CodePoint> cps);
std::string normalize_nfc(std::string_view utf8);

bool is_whitespace(CodePoint cp);
bool is_letter(CodePoint cp);
bool is_digit(CodePoint cp);
bool is_combining_mark(CodePoint cp);
bool is_uppercase_letter(CodePoint cp);
bool is_apostrophe(CodePoint cp);
bool is_hyphen(CodePoint cp);

CodePoint to_lower(CodePoint cp);
std::string to_lower_utf8(std::string_view word);

// Vowel letters: Ukrainian Cyrillic {а е є и і ї о у ю я} plus Latin
// {a e i o u y} for embedded foreign words. Input must be lowercase.
bool is_vowel_letter(CodePoint cp);

}  // namespace clausal

#endif  // CLAUSAL_UNICODE_HPP
