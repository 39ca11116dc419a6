#include "clausal/syllables.hpp"

#include "clausal/unicode.hpp"

namespace clausal {

int syllable_count(const Token& word) {
  if (word.kind == TokenKind::Number) return 0;
  int count = 0;
  for (CodePoint cp : utf8_decode(word.surface)) {
    if (is_vowel_letter(to_lower(cp))) ++count;
  }
  return count;
}

}  // namespace clausal
