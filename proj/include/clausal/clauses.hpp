#ifndef CLAUSAL_CLAUSES_HPP
#define CLAUSAL_CLAUSES_HPP

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clausal/segmenter.hpp"
#include "clausal/token.hpp"

namespace clausal {

// Counters feeding the clause rule:
//   clause_count = max(n1 + n2 + n3 + n4, nc + 1)
struct ClauseBreakdown {
  int n1 = 0;  // finite verbs and gerunds
  int n2 = 0;  // participles immediately after a comma
  int n3 = 0;  // predicative words
  int n4 = 0;  // predicate dashes
  int nc = 0;  // conjunctions immediately after a comma
  int clause_count = 1;

  bool operator==(const ClauseBreakdown&) const = default;
};

int clause_rule(int n1, int n2, int n3, int n4, int nc);

class PredicativeLexicon {
 public:
  PredicativeLexicon() = default;
  static PredicativeLexicon defaults();
  // One word per line, UTF-8, `#` comments.
  static PredicativeLexicon from_text(const std::string& text);

  void add(const std::string& word);
  bool contains(const std::string& lowercased_word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string> words_;
};

ClauseBreakdown count_clauses(const Sentence& sentence, const PredicativeLexicon& lexicon);

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluationRow {
  int x = 0;                   // clauses per sentence
  double gold_mean_len = 0.0;  // mean clause length in words, gold counts
  double auto_mean_len = 0.0;  // same, automatic counts
  int gold_sentences = 0;
  int auto_sentences = 0;
};

struct EvaluationReport {
  std::vector<bool> match;       // per sentence
  double mismatch_fraction = 0;  // mismatching sentences / total
  std::vector<EvaluationRow> rows;
};

// Compares gold and automatic clause counts sentence by sentence;
// word_counts aligns with both sequences. Mean lengths are pooled
// ratios per clause-count bucket.
EvaluationReport evaluate_counts(std::span<const ClauseBreakdown> gold,
                                 std::span<const ClauseBreakdown> automatic,
                                 std::span<const int> word_counts);

}  // namespace clausal

#endif  // CLAUSAL_CLAUSES_HPP
