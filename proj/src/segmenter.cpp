#include "clausal/segmenter.hpp"

#include "clausal/unicode.hpp"

namespace clausal {

namespace {

bool is_delimiter(const Token& tok) {
  if (tok.kind != TokenKind::Punct) return false;
  return tok.surface == "." || tok.surface == "!" || tok.surface == "?" || tok.surface == "…";
}

bool is_trailing_closer(const Token& tok) {
  if (tok.kind != TokenKind::Punct) return false;
  return tok.surface == "»" || tok.surface == "\"" || tok.surface == "”" ||
         tok.surface == "’" || tok.surface == "'" || tok.surface == ")" ||
         tok.surface == "]" || tok.surface == "}";
}

bool starts_with_capital(const Token& tok) {
  const auto cps = utf8_decode(tok.surface);
  return !cps.empty() && is_uppercase_letter(cps.front());
}

bool has_word(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (tokens[i].kind != TokenKind::Punct) return true;
  }
  return false;
}

std::vector<std::size_t> rule_based_cuts(const std::vector<Token>& tokens) {
  std::vector<std::size_t> cuts;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_delimiter(tokens[i])) {
      ++i;
      continue;
    }
    // a run of mixed delimiters ("...", "?!", "?..") is one event
    std::size_t j = i;
    while (j < n && is_delimiter(tokens[j])) ++j;
    while (j < n && is_trailing_closer(tokens[j])) ++j;
    // the capital-letter condition: look past punctuation to the next
    // word-like token; NUMBER never satisfies it
    std::size_t k = j;
    while (k < n && tokens[k].kind == TokenKind::Punct) ++k;
    const bool closes =
        (k == n) || (tokens[k].kind == TokenKind::Word && starts_with_capital(tokens[k]));
    if (closes && j < n) cuts.push_back(j);
    i = j;
  }
  return cuts;
}

}  // namespace

std::vector<Sentence> split_sentences(const TokenStream& stream) {
  const auto& tokens = stream.tokens;
  const std::vector<std::size_t>& cuts =
      !stream.boundaries.empty() ? stream.boundaries : rule_based_cuts(tokens);

  // segment [begin, end) ranges, then merge word-less fragments forward
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  auto local_cuts = cuts;
  local_cuts.push_back(tokens.size());
  for (std::size_t cut : local_cuts) {
    if (cut > begin) ranges.emplace_back(begin, cut);
    begin = cut;
  }

  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (const auto& r : ranges) {
    if (!merged.empty() && !has_word(tokens, merged.back().first, merged.back().second)) {
      merged.back().second = r.second;
    } else {
      merged.push_back(r);
    }
  }
  // a trailing word-less fragment joins the preceding sentence
  if (merged.size() >= 2 && !has_word(tokens, merged.back().first, merged.back().second)) {
    merged[merged.size() - 2].second = merged.back().second;
    merged.pop_back();
  }

  std::vector<Sentence> out;
  for (const auto& r : merged) {
    if (!has_word(tokens, r.first, r.second)) continue;  // word-less document
    Sentence s;
    s.index = out.size();
    s.tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(r.first),
                    tokens.begin() + static_cast<std::ptrdiff_t>(r.second));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace clausal
