#include "clausal/aggregate.hpp"

#include <algorithm>
#include <stdexcept>

namespace clausal {

double AggregateRow::mean_words(MeanMode mode) const {
  if (sentences == 0) return 0.0;
  if (mode == MeanMode::Pooled) return word_acc / (static_cast<double>(x) * sentences);
  return word_acc / sentences;
}

double AggregateRow::mean_syllables(MeanMode mode) const {
  if (sentences == 0) return 0.0;
  if (mode == MeanMode::Pooled) return syllable_acc / (static_cast<double>(x) * sentences);
  return syllable_acc / sentences;
}

const AggregateRow* AggregateTable::row(int x) const {
  if (x < 1 || static_cast<std::size_t>(x) > rows.size()) return nullptr;
  return &rows[static_cast<std::size_t>(x - 1)];
}

AggregateTable aggregate(std::span<const SentenceStats> sentences, MeanMode mode) {
  AggregateTable table;
  table.mode = mode;
  int max_x = 0;
  for (const auto& s : sentences) {
    if (s.clauses < 1) throw std::invalid_argument("sentence with clause count < 1");
    max_x = std::max(max_x, s.clauses);
  }
  table.rows.resize(static_cast<std::size_t>(max_x));
  for (int x = 1; x <= max_x; ++x) table.rows[static_cast<std::size_t>(x - 1)].x = x;
  for (const auto& s : sentences) {
    auto& row = table.rows[static_cast<std::size_t>(s.clauses - 1)];
    row.sentences += 1;
    if (mode == MeanMode::Pooled) {
      row.word_acc += s.words;
      row.syllable_acc += s.syllables;
    } else {
      row.word_acc += static_cast<double>(s.words) / s.clauses;
      row.syllable_acc += static_cast<double>(s.syllables) / s.clauses;
    }
  }
  table.total_sentences = static_cast<long long>(sentences.size());
  return table;
}

AggregateTable merge(const AggregateTable& a, const AggregateTable& b) {
  if (a.mode != b.mode) throw std::invalid_argument("cannot merge tables with different modes");
  AggregateTable out;
  out.mode = a.mode;
  out.total_sentences = a.total_sentences + b.total_sentences;
  const std::size_t n = std::max(a.rows.size(), b.rows.size());
  out.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = out.rows[i];
    row.x = static_cast<int>(i + 1);
    if (i < a.rows.size()) {
      row.sentences += a.rows[i].sentences;
      row.word_acc += a.rows[i].word_acc;
      row.syllable_acc += a.rows[i].syllable_acc;
    }
    if (i < b.rows.size()) {
      row.sentences += b.rows[i].sentences;
      row.word_acc += b.rows[i].word_acc;
      row.syllable_acc += b.rows[i].syllable_acc;
    }
  }
  return out;
}

}  // namespace clausal
