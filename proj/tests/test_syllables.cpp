#include <doctest.h>

#include "clausal/syllables.hpp"
#include "clausal/unicode.hpp"

using namespace clausal;

namespace {

Token word(const std::string& surface, TokenKind kind = TokenKind::Word) {
  Token tok;
  tok.surface = surface;
  tok.kind = kind;
  return tok;
}

}  // namespace

TEST_CASE("vowel counting on Ukrainian words") {
  CHECK(syllable_count(word("стежки")) == 2);   // е, и
  CHECK(syllable_count(word("і")) == 1);
  CHECK(syllable_count(word("тротуарі")) == 4);  // о, у, а, і
  CHECK(syllable_count(word("землею")) == 3);    // е, е, ю
  CHECK(syllable_count(word("їжак")) == 2);      // ї, а
}

TEST_CASE("case-invariant") {
  CHECK(syllable_count(word("СТЕЖКИ")) == syllable_count(word("стежки")));
  CHECK(syllable_count(word("Їжак")) == syllable_count(word("їжак")));
}

TEST_CASE("consonant-only words count zero") {
  CHECK(syllable_count(word("хм")) == 0);
  CHECK(syllable_count(word("брр")) == 0);
}

TEST_CASE("NUMBER tokens count zero") {
  CHECK(syllable_count(word("25", TokenKind::Number)) == 0);
}

TEST_CASE("Latin words use Latin vowels") {
  CHECK(syllable_count(word("system")) == 2);  // y, e
  CHECK(syllable_count(word("Oxford")) == 2);
}

TEST_CASE("count never exceeds the character count") {
  for (const std::string s : {"тротуарі", "ooo", "р", "перехресні", "a1b2"}) {
    CHECK(syllable_count(word(s)) <= static_cast<int>(utf8_decode(s).size()));
  }
}
