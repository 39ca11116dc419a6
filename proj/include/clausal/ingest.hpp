#ifndef CLAUSAL_INGEST_HPP
#define CLAUSAL_INGEST_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clausal/token.hpp"

namespace clausal {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splits raw text into WORD/NUMBER/PUNCT tokens. Letter or digit runs
// (apostrophe and hyphen are word-internal when flanked by letters or
// digits) become words; digit-only runs become NUMBER; every other
// non-whitespace character is a single PUNCT token. Input is
// NFC-normalized first. Malformed UTF-8 raises EncodingError with the
// byte offset.
TokenStream read_raw(std::string_view text);

struct TaggedDocument {
  TokenStream stream;
  std::vector<std::string> warnings;  // e.g. unknown tag strings
};

// Vertical format: one `SURFACE<TAB>TAG[<TAB>DASH_PRED]` per line, blank
// line = sentence boundary, `#` starts a comment line. Unknown tags map
// to OTHER with a warning; a wrong field count is an error with the line
// number.
TaggedDocument read_tagged(std::string_view text);

std::string write_vertical(const TokenStream& stream);

}  // namespace clausal

#endif  // CLAUSAL_INGEST_HPP
