#include <doctest.h>

#include <random>

#include "clausal/ingest.hpp"
#include "clausal/unicode.hpp"

using namespace clausal;

TEST_CASE("read_raw splits whitespace-separated words") {
  const auto stream = read_raw("Він стояв на тротуарі");
  REQUIRE(stream.tokens.size() == 4);
  for (const auto& tok : stream.tokens) CHECK(tok.kind == TokenKind::Word);
  CHECK(stream.tokens[0].surface == "Він");
  CHECK(stream.tokens[3].surface == "тротуарі");
}

TEST_CASE("read_raw splits trailing punctuation") {
  const auto stream = read_raw("картяр.");
  REQUIRE(stream.tokens.size() == 2);
  CHECK(stream.tokens[0].surface == "картяр");
  CHECK(stream.tokens[0].kind == TokenKind::Word);
  CHECK(stream.tokens[1].surface == ".");
  CHECK(stream.tokens[1].kind == TokenKind::Punct);
}

TEST_CASE("read_raw on empty input") {
  CHECK(read_raw("").tokens.empty());
}

TEST_CASE("apostrophe and hyphen are word-internal only") {
  const auto stream = read_raw("п'ять будь-хто 'цитата'");
  REQUIRE(stream.tokens.size() == 5);
  CHECK(stream.tokens[0].surface == "п'ять");
  CHECK(stream.tokens[1].surface == "будь-хто");
  CHECK(stream.tokens[2].surface == "'");
  CHECK(stream.tokens[3].surface == "цитата");
  CHECK(stream.tokens[4].surface == "'");
  CHECK(stream.tokens[4].kind == TokenKind::Punct);
}

TEST_CASE("trailing apostrophe becomes punctuation") {
  const auto stream = read_raw("слово' -тире");
  REQUIRE(stream.tokens.size() == 4);
  CHECK(stream.tokens[0].surface == "слово");
  CHECK(stream.tokens[1].surface == "'");
  CHECK(stream.tokens[2].surface == "-");
  CHECK(stream.tokens[3].surface == "тире");
}

TEST_CASE("digit runs are NUMBER tokens") {
  const auto stream = read_raw("25 гривень");
  REQUIRE(stream.tokens.size() == 2);
  CHECK(stream.tokens[0].kind == TokenKind::Number);
  CHECK(stream.tokens[1].kind == TokenKind::Word);
}

TEST_CASE("mixed alphanumeric runs are words") {
  const auto stream = read_raw("IPv6 3D");
  REQUIRE(stream.tokens.size() == 2);
  CHECK(stream.tokens[0].kind == TokenKind::Word);
  CHECK(stream.tokens[1].kind == TokenKind::Word);
}

TEST_CASE("decomposed Cyrillic composes to NFC") {
  // и + combining breve == й
  const auto stream = read_raw("и\xCC\x86 й");
  REQUIRE(stream.tokens.size() == 2);
  CHECK(stream.tokens[0].surface == stream.tokens[1].surface);
}

TEST_CASE("invalid UTF-8 reports the byte offset") {
  try {
    read_raw("аб\xFF");
    FAIL("expected EncodingError");
  } catch (const EncodingError& e) {
    CHECK(e.byte_offset() == 4);  // аб is 4 bytes
  }
}

TEST_CASE("surface concatenation preserves non-whitespace input") {
  const std::string input = "Він стояв, 25 «слів»… п'ять!";
  const auto stream = read_raw(input);
  std::string concat;
  for (const auto& tok : stream.tokens) concat += tok.surface;
  std::string expected;
  for (CodePoint cp : utf8_decode(input)) {
    if (!is_whitespace(cp)) utf8_append(expected, cp);
  }
  CHECK(concat == expected);
}

TEST_CASE("read_raw is deterministic") {
  const std::string input = "Речення одне. Речення друге!";
  CHECK(read_raw(input) == read_raw(input));
}

TEST_CASE("read_tagged maps fields") {
  const auto doc = read_tagged("стояв\tVERB_FIN\n");
  REQUIRE(doc.stream.tokens.size() == 1);
  const auto& tok = doc.stream.tokens[0];
  CHECK(tok.surface == "стояв");
  CHECK(tok.kind == TokenKind::Word);
  CHECK(tok.tag == GrammTag::VerbFin);
  CHECK_FALSE(tok.clause_dash);
}

TEST_CASE("read_tagged maps DASH_PRED") {
  const auto doc = read_tagged("—\tPUNCT\tDASH_PRED\n");
  REQUIRE(doc.stream.tokens.size() == 1);
  CHECK(doc.stream.tokens[0].kind == TokenKind::Punct);
  CHECK(doc.stream.tokens[0].clause_dash);
}

TEST_CASE("read_tagged rejects wrong field counts with line numbers") {
  CHECK_THROWS_WITH_AS(read_tagged("добре\tOTHER\na\tb\tc\td\te\n"),
                       doctest::Contains("line 2"), IngestError);
  CHECK_THROWS_AS(read_tagged("одинполе\n"), IngestError);
}

TEST_CASE("read_tagged warns on unknown tags") {
  const auto doc = read_tagged("слово\tNOUN\n");
  REQUIRE(doc.stream.tokens.size() == 1);
  CHECK(doc.stream.tokens[0].tag == GrammTag::Other);
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].find("NOUN") != std::string::npos);
}

TEST_CASE("read_tagged records blank-line boundaries, skips comments") {
  const auto doc = read_tagged("# comment\nодне\tOTHER\n\n\nдва\tOTHER\n\n");
  CHECK(doc.stream.tokens.size() == 2);
  CHECK(doc.stream.boundaries == std::vector<std::size_t>{1});
}

TEST_CASE("read_tagged rejects DASH_PRED on non-dash tokens") {
  CHECK_THROWS_AS(read_tagged("слово\tOTHER\tDASH_PRED\n"), IngestError);
}

namespace {

TokenStream random_stream(std::mt19937& rng) {
  static const std::vector<std::string> words{"він", "стежки", "п'ять", "Іван", "word"};
  static const std::vector<std::string> puncts{".", ",", "—", "«", "»"};
  static const std::vector<GrammTag> tags{GrammTag::VerbFin, GrammTag::Gerund,
                                          GrammTag::Infinitive, GrammTag::Participle,
                                          GrammTag::Predicative, GrammTag::Conj,
                                          GrammTag::Other};
  TokenStream stream;
  std::uniform_int_distribution<int> len(1, 30);
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    Token tok;
    if (rng() % 3 == 0) {
      tok.kind = TokenKind::Punct;
      tok.surface = puncts[rng() % puncts.size()];
      if (tok.surface == "—" && rng() % 2 == 0) tok.clause_dash = true;
    } else if (rng() % 5 == 0) {
      tok.kind = TokenKind::Number;
      tok.surface = std::to_string(rng() % 1000);
      tok.tag = tags[rng() % tags.size()];
    } else {
      tok.kind = TokenKind::Word;
      tok.surface = words[rng() % words.size()];
      tok.tag = tags[rng() % tags.size()];
    }
    stream.tokens.push_back(std::move(tok));
    if (i > 0 && i + 1 < n && rng() % 6 == 0 &&
        (stream.boundaries.empty() || stream.boundaries.back() != stream.tokens.size())) {
      stream.boundaries.push_back(stream.tokens.size());
    }
  }
  return stream;
}

}  // namespace

TEST_CASE("vertical round trip: write then read yields the identical stream") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 100; ++iter) {
    const auto stream = random_stream(rng);
    const auto doc = read_tagged(write_vertical(stream));
    CHECK(doc.stream == stream);
    CHECK(doc.warnings.empty());
  }
}
