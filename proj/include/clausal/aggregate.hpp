#ifndef CLAUSAL_AGGREGATE_HPP
#define CLAUSAL_AGGREGATE_HPP

#include <span>
#include <vector>

namespace clausal {

struct SentenceStats {
  int words = 0;
  int syllables = 0;
  int clauses = 1;  // >= 1
};

// Pooled: bucket mean = total words / total clauses in the bucket.
// PerSentence: mean of per-sentence words/clauses ratios.
enum class MeanMode { Pooled, PerSentence };

struct AggregateRow {
  int x = 0;  // clauses per sentence
  int sentences = 0;
  // Pooled mode: raw word/syllable sums (exact). PerSentence mode:
  // sums of per-sentence length ratios.
  double word_acc = 0.0;
  double syllable_acc = 0.0;

  double mean_words(MeanMode mode) const;
  double mean_syllables(MeanMode mode) const;
};

struct AggregateTable {
  std::vector<AggregateRow> rows;  // dense in x = 1..max observed
  long long total_sentences = 0;
  MeanMode mode = MeanMode::Pooled;

  const AggregateRow* row(int x) const;
};

AggregateTable aggregate(std::span<const SentenceStats> sentences,
                         MeanMode mode = MeanMode::Pooled);

// Commutative-monoid merge of partial tables (same mode).
AggregateTable merge(const AggregateTable& a, const AggregateTable& b);

}  // namespace clausal

#endif  // CLAUSAL_AGGREGATE_HPP
