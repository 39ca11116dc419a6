#include "clausal/ingest.hpp"

#include <algorithm>

#include "clausal/unicode.hpp"

namespace clausal {

const char* tag_name(GrammTag tag) {
  switch (tag) {
    case GrammTag::VerbFin: return "VERB_FIN";
    case GrammTag::Gerund: return "GERUND";
    case GrammTag::Infinitive: return "INFINITIVE";
    case GrammTag::Participle: return "PARTICIPLE";
    case GrammTag::Predicative: return "PREDICATIVE";
    case GrammTag::Conj: return "CONJ";
    case GrammTag::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<GrammTag> tag_from_name(const std::string& name) {
  if (name == "VERB_FIN") return GrammTag::VerbFin;
  if (name == "GERUND") return GrammTag::Gerund;
  if (name == "INFINITIVE") return GrammTag::Infinitive;
  if (name == "PARTICIPLE") return GrammTag::Participle;
  if (name == "PREDICATIVE") return GrammTag::Predicative;
  if (name == "CONJ") return GrammTag::Conj;
  if (name == "OTHER") return GrammTag::Other;
  return std::nullopt;
}

namespace {

bool is_word_char(CodePoint cp) {
  return is_letter(cp) || is_digit(cp) || is_combining_mark(cp);
}

bool all_digits(const std::vector<CodePoint>& cps, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (!is_digit(cps[i])) return false;
  }
  return true;
}

}  // namespace

TokenStream read_raw(std::string_view text) {
  const auto cps = compose_nfc(utf8_decode(text));
  TokenStream out;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    const CodePoint cp = cps[i];
    if (is_whitespace(cp)) {
      ++i;
      continue;
    }
    if (is_word_char(cp)) {
      const std::size_t begin = i;
      while (i < n) {
        if (is_word_char(cps[i])) {
          ++i;
        } else if ((is_apostrophe(cps[i]) || is_hyphen(cps[i])) && i > begin && i + 1 < n &&
                   is_word_char(cps[i + 1])) {
          // word-internal apostrophe/hyphen: п'ять, будь-хто
          ++i;
        } else {
          break;
        }
      }
      Token tok;
      tok.surface = utf8_encode({cps.begin() + begin, cps.begin() + i});
      tok.kind = all_digits(cps, begin, i) ? TokenKind::Number : TokenKind::Word;
      out.tokens.push_back(std::move(tok));
    } else {
      Token tok;
      utf8_append(tok.surface, cp);
      tok.kind = TokenKind::Punct;
      out.tokens.push_back(std::move(tok));
      ++i;
    }
  }
  return out;
}

namespace {

bool is_dash_surface(const std::string& s) {
  return s == "-" || s == "‐" || s == "‑" || s == "‒" || s == "–" ||
         s == "—";
}

bool surface_all_digits(const std::string& s) {
  for (CodePoint cp : utf8_decode(s)) {
    if (!is_digit(cp)) return false;
  }
  return true;
}

}  // namespace

TaggedDocument read_tagged(std::string_view text) {
  TaggedDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        (eol == std::string_view::npos) ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      // sentence boundary; collapse runs and ignore leading/trailing blanks
      if (!doc.stream.tokens.empty() &&
          (doc.stream.boundaries.empty() ||
           doc.stream.boundaries.back() != doc.stream.tokens.size())) {
        doc.stream.boundaries.push_back(doc.stream.tokens.size());
      }
    } else if (line.front() != '#') {
      std::vector<std::string> fields;
      std::size_t start = 0;
      while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
          fields.emplace_back(line.substr(start));
          break;
        }
        fields.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
      }
      if (fields.size() < 2 || fields.size() > 3) {
        throw IngestError("line " + std::to_string(line_no) + ": expected 2 or 3 fields, got " +
                          std::to_string(fields.size()));
      }
      if (fields[0].empty()) {
        throw IngestError("line " + std::to_string(line_no) + ": empty surface");
      }
      Token tok;
      tok.surface = normalize_nfc(fields[0]);
      if (fields[1] == "PUNCT") {
        tok.kind = TokenKind::Punct;
      } else {
        auto tag = tag_from_name(fields[1]);
        if (!tag) {
          doc.warnings.push_back("line " + std::to_string(line_no) + ": unknown tag '" +
                                 fields[1] + "' mapped to OTHER");
          tag = GrammTag::Other;
        }
        tok.tag = tag;
        tok.kind = surface_all_digits(tok.surface) ? TokenKind::Number : TokenKind::Word;
      }
      if (fields.size() == 3) {
        if (fields[2] != "DASH_PRED") {
          throw IngestError("line " + std::to_string(line_no) + ": unknown annotation '" +
                            fields[2] + "'");
        }
        if (tok.kind != TokenKind::Punct || !is_dash_surface(tok.surface)) {
          throw IngestError("line " + std::to_string(line_no) +
                            ": DASH_PRED requires a dash PUNCT token");
        }
        tok.clause_dash = true;
      }
      doc.stream.tokens.push_back(std::move(tok));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  // a trailing blank line is not an interior boundary
  if (!doc.stream.boundaries.empty() &&
      doc.stream.boundaries.back() == doc.stream.tokens.size()) {
    doc.stream.boundaries.pop_back();
  }
  return doc;
}

std::string write_vertical(const TokenStream& stream) {
  std::string out;
  std::size_t next_boundary = 0;
  for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
    if (next_boundary < stream.boundaries.size() && stream.boundaries[next_boundary] == i) {
      out += '\n';
      ++next_boundary;
    }
    const Token& tok = stream.tokens[i];
    out += tok.surface;
    out += '\t';
    if (tok.kind == TokenKind::Punct) {
      out += "PUNCT";
    } else {
      out += tag_name(tok.tag.value_or(GrammTag::Other));
    }
    if (tok.clause_dash) out += "\tDASH_PRED";
    out += '\n';
  }
  return out;
}

}  // namespace clausal
