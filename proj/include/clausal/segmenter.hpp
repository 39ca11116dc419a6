#ifndef CLAUSAL_SEGMENTER_HPP
#define CLAUSAL_SEGMENTER_HPP

#include <cstddef>
#include <vector>

#include "clausal/token.hpp"

namespace clausal {

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;  // ordinal position in the document

  bool operator==(const Sentence&) const = default;
};

// Splits a token stream into sentences. Explicit boundaries (blank lines
// of tagged input) take precedence; otherwise a delimiter run (".", "!",
// "?", "…", possibly mixed, e.g. "?..") closes a sentence when the next
// word starts with a capital letter or no word follows. Trailing closing
// quotes/brackets stay with the closed sentence; fragments without any
// word token are merged into the following sentence.
std::vector<Sentence> split_sentences(const TokenStream& stream);

}  // namespace clausal

#endif  // CLAUSAL_SEGMENTER_HPP
