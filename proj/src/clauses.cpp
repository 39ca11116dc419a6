#include "clausal/clauses.hpp"

#include <algorithm>

#include "clausal/unicode.hpp"

namespace clausal {

int clause_rule(int n1, int n2, int n3, int n4, int nc) {
  return std::max(n1 + n2 + n3 + n4, nc + 1);
}

PredicativeLexicon PredicativeLexicon::defaults() {
  PredicativeLexicon lex;
  for (const char* w : {"треба", "нема", "немає", "можна", "годі", "жаль", "слід",
                        "шкода", "непереливки", "нічого"}) {
    lex.add(w);
  }
  return lex;
}

PredicativeLexicon PredicativeLexicon::from_text(const std::string& text) {
  PredicativeLexicon lex;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line =
        (eol == std::string::npos) ? text.substr(pos) : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // trim ASCII whitespace
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      lex.add(line.substr(first, last - first + 1));
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return lex;
}

void PredicativeLexicon::add(const std::string& word) {
  words_.insert(to_lower_utf8(normalize_nfc(word)));
}

bool PredicativeLexicon::contains(const std::string& lowercased_word) const {
  return words_.count(lowercased_word) > 0;
}

namespace {

bool is_comma(const Token& tok) {
  return tok.kind == TokenKind::Punct && tok.surface == ",";
}

}  // namespace

ClauseBreakdown count_clauses(const Sentence& sentence, const PredicativeLexicon& lexicon) {
  ClauseBreakdown b;
  const auto& toks = sentence.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& tok = toks[i];
    if (tok.clause_dash) {
      ++b.n4;
      continue;
    }
    if (tok.kind == TokenKind::Punct) continue;
    const GrammTag tag = tok.tag.value_or(GrammTag::Other);
    const bool after_comma = i > 0 && is_comma(toks[i - 1]);
    switch (tag) {
      case GrammTag::VerbFin:
      case GrammTag::Gerund:
        ++b.n1;  // never also lexicon-counted
        break;
      case GrammTag::Participle:
        if (after_comma) ++b.n2;
        break;
      case GrammTag::Predicative:
        ++b.n3;
        break;
      case GrammTag::Conj:
        if (after_comma) ++b.nc;
        break;
      case GrammTag::Infinitive:
      case GrammTag::Other:
        if (tok.kind == TokenKind::Word && lexicon.contains(to_lower_utf8(tok.surface))) {
          ++b.n3;
        }
        break;
    }
  }
  b.clause_count = clause_rule(b.n1, b.n2, b.n3, b.n4, b.nc);
  return b;
}

EvaluationReport evaluate_counts(std::span<const ClauseBreakdown> gold,
                                 std::span<const ClauseBreakdown> automatic,
                                 std::span<const int> word_counts) {
  if (gold.size() != automatic.size() || gold.size() != word_counts.size()) {
    throw AlignmentError("sequence lengths differ: gold=" + std::to_string(gold.size()) +
                         " auto=" + std::to_string(automatic.size()) +
                         " words=" + std::to_string(word_counts.size()));
  }
  EvaluationReport report;
  report.match.reserve(gold.size());
  std::size_t mismatches = 0;
  int max_x = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool ok = gold[i].clause_count == automatic[i].clause_count;
    report.match.push_back(ok);
    if (!ok) ++mismatches;
    max_x = std::max({max_x, gold[i].clause_count, automatic[i].clause_count});
  }
  report.mismatch_fraction =
      gold.empty() ? 0.0 : static_cast<double>(mismatches) / static_cast<double>(gold.size());

  report.rows.resize(static_cast<std::size_t>(max_x));
  std::vector<long long> gold_words(static_cast<std::size_t>(max_x), 0);
  std::vector<long long> auto_words(static_cast<std::size_t>(max_x), 0);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto& gr = report.rows[static_cast<std::size_t>(gold[i].clause_count - 1)];
    gr.gold_sentences += 1;
    gold_words[static_cast<std::size_t>(gold[i].clause_count - 1)] += word_counts[i];
    auto& ar = report.rows[static_cast<std::size_t>(automatic[i].clause_count - 1)];
    ar.auto_sentences += 1;
    auto_words[static_cast<std::size_t>(automatic[i].clause_count - 1)] += word_counts[i];
  }
  for (int x = 1; x <= max_x; ++x) {
    auto& row = report.rows[static_cast<std::size_t>(x - 1)];
    row.x = x;
    if (row.gold_sentences > 0) {
      row.gold_mean_len = static_cast<double>(gold_words[static_cast<std::size_t>(x - 1)]) /
                          (static_cast<double>(x) * row.gold_sentences);
    }
    if (row.auto_sentences > 0) {
      row.auto_mean_len = static_cast<double>(auto_words[static_cast<std::size_t>(x - 1)]) /
                          (static_cast<double>(x) * row.auto_sentences);
    }
  }
  return report;
}

}  // namespace clausal
