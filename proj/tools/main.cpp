#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clausal/aggregate.hpp"
#include "clausal/clauses.hpp"
#include "clausal/fitting.hpp"
#include "clausal/ingest.hpp"
#include "clausal/segmenter.hpp"
#include "clausal/syllables.hpp"
#include "clausal/table_io.hpp"
#include "clausal/unicode.hpp"

namespace fs = std::filesystem;
using namespace clausal;

namespace {

void ensure_writable_dir(const std::string& dir) {
  fs::create_directories(dir);
  const fs::path probe = fs::path(dir) / ".write_probe";
  std::FILE* f = std::fopen(probe.string().c_str(), "w");
  if (!f) throw std::runtime_error("output directory not writable: " + dir);
  std::fclose(f);
  fs::remove(probe);
}

std::vector<SentenceRecord> analyze_sentences(const std::vector<Sentence>& sentences,
                                              const PredicativeLexicon& lexicon) {
  std::vector<SentenceRecord> records;
  records.reserve(sentences.size());
  for (const auto& s : sentences) {
    SentenceRecord rec;
    rec.index = s.index;
    for (const auto& tok : s.tokens) {
      if (tok.kind == TokenKind::Punct) continue;
      rec.words += 1;
      rec.syllables += syllable_count(tok);
    }
    rec.breakdown = count_clauses(s, lexicon);
    records.push_back(rec);
  }
  return records;
}

AggregateTable table_of(const std::vector<SentenceRecord>& records, MeanMode mode) {
  std::vector<SentenceStats> stats;
  stats.reserve(records.size());
  for (const auto& rec : records) {
    stats.push_back({rec.words, rec.syllables, rec.breakdown.clause_count});
  }
  return aggregate(stats, mode);
}

nlohmann::json mal_json(const MalParams& p) {
  return {{"A", p.amplitude},
          {"b", p.exponent},
          {"c", p.decay},
          {"std_errors", {p.std_errors[0], p.std_errors[1], p.std_errors[2]}},
          {"chi2_per_n", p.chi2_per_n}};
}

std::string plot_tsv(const std::vector<int>& xs, const std::vector<double>& observed,
                     const std::vector<double>& estimated) {
  std::string out = "x\tobserved\testimated\n";
  char buf[96];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d\t%.6f\t%.6f\n", xs[i], observed[i], estimated[i]);
    out += buf;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus clause-statistics toolkit: segmentation, clause counts, "
               "length aggregation and model fitting"};
  app.require_subcommand(1);

  std::string input, output, out_dir = ".", lexicon_path, gold_path;
  std::string mode = "tagged", weighting = "count", format = "tsv", negbin_method = "mle";
  bool per_sentence_means = false;

  auto* segment = app.add_subcommand("segment", "Split raw text into sentences (vertical output)");
  segment->add_option("input", input, "raw UTF-8 text file")->required();
  segment->add_option("-o,--output", output, "output file (default: stdout)");

  auto* analyze = app.add_subcommand("analyze", "Per-sentence clause statistics and aggregate table");
  analyze->add_option("input", input, "input file")->required();
  analyze->add_option("--mode", mode, "raw|tagged (default tagged)")
      ->check(CLI::IsMember({"raw", "tagged"}));
  analyze->add_option("--lexicon", lexicon_path, "predicative-word lexicon file");
  analyze->add_option("--out", out_dir, "output directory (default .)");
  analyze->add_option("--format", format, "table format: tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));
  analyze->add_flag("--per-sentence-means", per_sentence_means,
                    "bucket means as mean of per-sentence ratios instead of pooled ratios");

  auto* fit = app.add_subcommand("fit", "Fit clause-length and sentence-frequency models");
  fit->add_option("input", input, "aggregate table (TSV or JSON)")->required();
  fit->add_option("--weighting", weighting, "count|uniform (default count)")
      ->check(CLI::IsMember({"count", "uniform"}));
  fit->add_option("--negbin-method", negbin_method, "mle|ls (default mle)")
      ->check(CLI::IsMember({"mle", "ls"}));
  fit->add_option("--out", out_dir, "output directory (default .)");

  auto* evaluate = app.add_subcommand("evaluate", "Compare automatic clause counts against gold");
  evaluate->add_option("input", input, "per-sentence TSV from `analyze`")->required();
  evaluate->add_option("--gold", gold_path, "gold counts file: `index<TAB>clauses`")->required();
  evaluate->add_option("--format", format, "output format: tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));
  evaluate->add_option("-o,--output", output, "output file (default: stdout)");

  auto* report = app.add_subcommand("report", "Aggregate a per-sentence TSV into the sentence-clause table");
  report->add_option("input", input, "per-sentence TSV from `analyze`")->required();
  report->add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));
  report->add_flag("--per-sentence-means", per_sentence_means,
                   "bucket means as mean of per-sentence ratios");
  report->add_option("-o,--output", output, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (segment->parsed()) {
      const auto text = read_file(input);
      const auto stream = read_raw(text);
      const auto sentences = split_sentences(stream);
      TokenStream out;
      for (const auto& s : sentences) {
        if (!out.tokens.empty()) out.boundaries.push_back(out.tokens.size());
        out.tokens.insert(out.tokens.end(), s.tokens.begin(), s.tokens.end());
      }
      const auto vertical = write_vertical(out);
      if (output.empty()) {
        std::cout << vertical;
      } else {
        write_file(output, vertical);
      }
    } else if (analyze->parsed()) {
      ensure_writable_dir(out_dir);
      PredicativeLexicon lexicon =
          lexicon_path.empty() ? PredicativeLexicon::defaults()
                               : PredicativeLexicon::from_text(read_file(lexicon_path));
      const auto text = read_file(input);
      TokenStream stream;
      if (mode == "tagged") {
        auto doc = read_tagged(text);
        for (const auto& w : doc.warnings) std::cerr << "warning: " << input << ": " << w << "\n";
        stream = std::move(doc.stream);
      } else {
        std::cerr << "warning: raw mode carries no grammatical tags; clause counts are a "
                     "lower bound (conjunction and verb counters need tagged input)\n";
        stream = read_raw(text);
      }
      const auto sentences = split_sentences(stream);
      const auto records = analyze_sentences(sentences, lexicon);
      const auto table = table_of(
          records, per_sentence_means ? MeanMode::PerSentence : MeanMode::Pooled);
      write_file((fs::path(out_dir) / "sentences.tsv").string(), write_sentence_tsv(records));
      if (format == "json") {
        write_file((fs::path(out_dir) / "table.json").string(), write_table_json(table));
      } else {
        write_file((fs::path(out_dir) / "table.tsv").string(), write_table_tsv(table));
      }
    } else if (fit->parsed()) {
      ensure_writable_dir(out_dir);
      const auto table = read_table_auto(read_file(input));
      const Weighting w = weighting == "count" ? Weighting::Count : Weighting::Uniform;
      const auto words = fit_mal(table, MalTarget::Words, w);
      const auto syllables = fit_mal(table, MalTarget::Syllables, w);
      const auto negbin = fit_negbin(table, negbin_method == "mle"
                                                ? NegBinMethod::MaxLikelihood
                                                : NegBinMethod::LeastSquares);
      nlohmann::json doc{
          {"schema_version", 1},
          {"total_sentences", table.total_sentences},
          {"weighting", weighting},
          {"negbin_method", negbin_method},
          {"mal_words", mal_json(words)},
          {"mal_syllables", mal_json(syllables)},
          {"negbin",
           {{"p", negbin.p},
            {"r", negbin.r},
            {"std_errors", {negbin.std_errors[0], negbin.std_errors[1]}},
            {"chi2_per_n", negbin.chi2_per_n}}}};
      write_file((fs::path(out_dir) / "fit_report.json").string(), doc.dump(2) + "\n");

      std::vector<int> xs;
      std::vector<double> obs_w, est_w, obs_s, est_s, obs_n, est_n;
      const auto counts =
          predicted_counts(negbin, table.total_sentences, static_cast<int>(table.rows.size()));
      for (const auto& row : table.rows) {
        xs.push_back(row.x);
        obs_w.push_back(row.mean_words(table.mode));
        est_w.push_back(mal_eval(row.x, words));
        obs_s.push_back(row.mean_syllables(table.mode));
        est_s.push_back(mal_eval(row.x, syllables));
        obs_n.push_back(row.sentences);
        est_n.push_back(counts[static_cast<std::size_t>(row.x - 1)]);
      }
      write_file((fs::path(out_dir) / "plot_words.tsv").string(), plot_tsv(xs, obs_w, est_w));
      write_file((fs::path(out_dir) / "plot_syllables.tsv").string(),
                 plot_tsv(xs, obs_s, est_s));
      write_file((fs::path(out_dir) / "plot_sentences.tsv").string(),
                 plot_tsv(xs, obs_n, est_n));
    } else if (evaluate->parsed()) {
      const auto records = read_sentence_tsv(read_file(input));
      const auto gold_counts = read_gold_counts(read_file(gold_path));
      std::vector<ClauseBreakdown> automatic, gold;
      std::vector<int> word_counts;
      for (const auto& rec : records) {
        automatic.push_back(rec.breakdown);
        word_counts.push_back(rec.words);
      }
      for (int c : gold_counts) {
        ClauseBreakdown b;
        b.clause_count = c;
        gold.push_back(b);
      }
      const auto rep = evaluate_counts(gold, automatic, word_counts);
      std::string out_text;
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : rep.rows) {
          rows.push_back({{"x", row.x},
                          {"gold_mean_len", row.gold_mean_len},
                          {"auto_mean_len", row.auto_mean_len},
                          {"gold_sentences", row.gold_sentences},
                          {"auto_sentences", row.auto_sentences}});
        }
        nlohmann::json doc{{"schema_version", 1},
                           {"sentences", rep.match.size()},
                           {"mismatch_fraction", rep.mismatch_fraction},
                           {"rows", rows}};
        out_text = doc.dump(2) + "\n";
      } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "# mismatch_fraction\t%.6f\n", rep.mismatch_fraction);
        out_text = buf;
        out_text += "x\tgold_mean_len\tauto_mean_len\tgold_sentences\tauto_sentences\n";
        for (const auto& row : rep.rows) {
          std::snprintf(buf, sizeof buf, "%d\t%.2f\t%.2f\t%d\t%d\n", row.x, row.gold_mean_len,
                        row.auto_mean_len, row.gold_sentences, row.auto_sentences);
          out_text += buf;
        }
      }
      if (output.empty()) {
        std::cout << out_text;
      } else {
        write_file(output, out_text);
      }
    } else if (report->parsed()) {
      const auto records = read_sentence_tsv(read_file(input));
      const auto table = table_of(
          records, per_sentence_means ? MeanMode::PerSentence : MeanMode::Pooled);
      const auto out_text =
          format == "json" ? write_table_json(table) : write_table_tsv(table);
      if (output.empty()) {
        std::cout << out_text;
      } else {
        write_file(output, out_text);
      }
    }
  } catch (const EncodingError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
