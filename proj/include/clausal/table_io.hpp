#ifndef CLAUSAL_TABLE_IO_HPP
#define CLAUSAL_TABLE_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clausal/aggregate.hpp"
#include "clausal/clauses.hpp"

namespace clausal {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Aggregate table interchange: TSV columns `x mean_words mean_syllables
// sentences` (Table layout order) or the equivalent JSON array.
std::string write_table_tsv(const AggregateTable& table);
std::string write_table_json(const AggregateTable& table);
AggregateTable read_table_tsv(std::string_view text);
AggregateTable read_table_json(std::string_view text);
// Dispatches on a leading '{'/'[' (JSON) vs anything else (TSV).
AggregateTable read_table_auto(std::string_view text);

// Per-sentence analysis rows: `index words syllables n1 n2 n3 n4 nc clauses`.
struct SentenceRecord {
  std::size_t index = 0;
  int words = 0;
  int syllables = 0;
  ClauseBreakdown breakdown;
};

std::string write_sentence_tsv(const std::vector<SentenceRecord>& records);
std::vector<SentenceRecord> read_sentence_tsv(std::string_view text);

// Gold clause counts for evaluation: `index clauses` per line.
std::vector<int> read_gold_counts(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace clausal

#endif  // CLAUSAL_TABLE_IO_HPP
