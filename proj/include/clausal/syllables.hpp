#ifndef CLAUSAL_SYLLABLES_HPP
#define CLAUSAL_SYLLABLES_HPP

#include "clausal/token.hpp"

namespace clausal {

// Syllable count = vowel-letter count of the lowercased surface
// (Ukrainian vowels; Latin vowels for embedded foreign words).
// NUMBER tokens count 0 syllables.
int syllable_count(const Token& word);

}  // namespace clausal

#endif  // CLAUSAL_SYLLABLES_HPP
