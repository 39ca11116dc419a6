#include "clausal/table_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clausal {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        (eol == std::string_view::npos) ? text.substr(pos) : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

long long parse_int(std::string_view s, std::size_t line_no, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid " + what + " '" +
                     std::string(s) + "'");
  }
  return value;
}

double parse_double(std::string_view s, std::size_t line_no, const char* what) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid " + what + " '" +
                     std::string(s) + "'");
  }
  return value;
}

std::string format_mean(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string write_table_tsv(const AggregateTable& table) {
  std::string out = "x\tmean_words\tmean_syllables\tsentences\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.x);
    out += '\t';
    out += format_mean(row.mean_words(table.mode));
    out += '\t';
    out += format_mean(row.mean_syllables(table.mode));
    out += '\t';
    out += std::to_string(row.sentences);
    out += '\n';
  }
  return out;
}

std::string write_table_json(const AggregateTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"x", row.x},
                    {"mean_words", row.mean_words(table.mode)},
                    {"mean_syllables", row.mean_syllables(table.mode)},
                    {"sentences", row.sentences}});
  }
  nlohmann::json doc{{"schema_version", 1},
                     {"total_sentences", table.total_sentences},
                     {"rows", rows}};
  return doc.dump(2) + "\n";
}

namespace {

AggregateTable table_from_rows(const std::vector<std::array<double, 4>>& raw) {
  AggregateTable table;
  int max_x = 0;
  for (const auto& r : raw) max_x = std::max(max_x, static_cast<int>(r[0]));
  table.rows.resize(static_cast<std::size_t>(max_x));
  for (int x = 1; x <= max_x; ++x) table.rows[static_cast<std::size_t>(x - 1)].x = x;
  for (const auto& r : raw) {
    const int x = static_cast<int>(r[0]);
    if (x < 1) throw ParseError("table row with x < 1");
    auto& row = table.rows[static_cast<std::size_t>(x - 1)];
    row.sentences = static_cast<int>(r[3]);
    // reconstruct pooled sums from the published means
    row.word_acc = r[1] * x * row.sentences;
    row.syllable_acc = r[2] * x * row.sentences;
    table.total_sentences += row.sentences;
  }
  return table;
}

}  // namespace

AggregateTable read_table_tsv(std::string_view text) {
  std::vector<std::array<double, 4>> raw;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 2) == "x\t") continue;  // header
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    }
    raw.push_back({static_cast<double>(parse_int(fields[0], i + 1, "x")),
                   parse_double(fields[1], i + 1, "mean_words"),
                   parse_double(fields[2], i + 1, "mean_syllables"),
                   static_cast<double>(parse_int(fields[3], i + 1, "sentences"))});
  }
  return table_from_rows(raw);
}

AggregateTable read_table_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON table: ") + e.what());
  }
  const auto& rows = doc.contains("rows") ? doc["rows"] : doc;
  if (!rows.is_array()) throw ParseError("JSON table: expected an array of rows");
  std::vector<std::array<double, 4>> raw;
  for (const auto& r : rows) {
    raw.push_back({r.at("x").get<double>(), r.at("mean_words").get<double>(),
                   r.at("mean_syllables").get<double>(), r.at("sentences").get<double>()});
  }
  return table_from_rows(raw);
}

AggregateTable read_table_auto(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{' || c == '[') return read_table_json(text);
    break;
  }
  return read_table_tsv(text);
}

std::string write_sentence_tsv(const std::vector<SentenceRecord>& records) {
  std::string out = "index\twords\tsyllables\tn1\tn2\tn3\tn4\tnc\tclauses\n";
  for (const auto& rec : records) {
    std::ostringstream line;
    line << rec.index << '\t' << rec.words << '\t' << rec.syllables << '\t'
         << rec.breakdown.n1 << '\t' << rec.breakdown.n2 << '\t' << rec.breakdown.n3 << '\t'
         << rec.breakdown.n4 << '\t' << rec.breakdown.nc << '\t' << rec.breakdown.clause_count
         << '\n';
    out += line.str();
  }
  return out;
}

std::vector<SentenceRecord> read_sentence_tsv(std::string_view text) {
  std::vector<SentenceRecord> records;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 6) == "index\t") continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 9) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    }
    SentenceRecord rec;
    rec.index = static_cast<std::size_t>(parse_int(fields[0], i + 1, "index"));
    rec.words = static_cast<int>(parse_int(fields[1], i + 1, "words"));
    rec.syllables = static_cast<int>(parse_int(fields[2], i + 1, "syllables"));
    rec.breakdown.n1 = static_cast<int>(parse_int(fields[3], i + 1, "n1"));
    rec.breakdown.n2 = static_cast<int>(parse_int(fields[4], i + 1, "n2"));
    rec.breakdown.n3 = static_cast<int>(parse_int(fields[5], i + 1, "n3"));
    rec.breakdown.n4 = static_cast<int>(parse_int(fields[6], i + 1, "n4"));
    rec.breakdown.nc = static_cast<int>(parse_int(fields[7], i + 1, "nc"));
    rec.breakdown.clause_count = static_cast<int>(parse_int(fields[8], i + 1, "clauses"));
    records.push_back(rec);
  }
  return records;
}

std::vector<int> read_gold_counts(std::string_view text) {
  std::vector<int> counts;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 6) == "index\t") continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected `index<TAB>clauses`");
    }
    counts.push_back(static_cast<int>(parse_int(fields[1], i + 1, "clauses")));
  }
  return counts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace clausal
