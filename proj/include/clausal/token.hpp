#ifndef CLAUSAL_TOKEN_HPP
#define CLAUSAL_TOKEN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace clausal {

enum class TokenKind { Word, Punct, Number };

enum class GrammTag { VerbFin, Gerund, Infinitive, Participle, Predicative, Conj, Other };

struct Token {
  std::string surface;  // NFC-normalized UTF-8, non-empty
  TokenKind kind = TokenKind::Word;
  std::optional<GrammTag> tag;
  bool clause_dash = false;  // dash standing for an omitted predicate verb

  bool operator==(const Token&) const = default;
};

// A document's tokens plus explicit sentence boundaries (from blank lines
// in tagged input). boundaries[i] = k means a break before tokens[k];
// values are strictly interior (0 < k < tokens.size()) and increasing.
struct TokenStream {
  std::vector<Token> tokens;
  std::vector<std::size_t> boundaries;

  bool operator==(const TokenStream&) const = default;
};

const char* tag_name(GrammTag tag);
std::optional<GrammTag> tag_from_name(const std::string& name);

}  // namespace clausal

#endif  // CLAUSAL_TOKEN_HPP
