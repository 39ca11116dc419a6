#include "clausal/unicode.hpp"

#include <array>
#include <utility>

namespace clausal {

std::vector<CodePoint> utf8_decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    std::size_t len;
    CodePoint cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(i), i);
    }
    if (i + len > text.size()) {
      throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(i), i);
    }
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw EncodingError("invalid UTF-8 continuation byte at offset " + std::to_string(i + k),
                            i + k);
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong encodings and surrogates
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      throw EncodingError("invalid UTF-8 code point at offset " + std::to_string(i), i);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void utf8_append(std::string& out, CodePoint cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8_encode(const std::vector<CodePoint>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (CodePoint cp : cps) utf8_append(out, cp);
  return out;
}

namespace {

// (base, combining) -> composed
struct Composition {
  CodePoint base;
  CodePoint mark;
  CodePoint composed;
};

constexpr std::array<Composition, 22> kCompositions{{
    // Cyrillic breve
    {0x0418, 0x0306, 0x0419},  // И + ˘ -> Й
    {0x0438, 0x0306, 0x0439},  // и + ˘ -> й
    {0x0423, 0x0306, 0x040E},  // У + ˘ -> Ў
    {0x0443, 0x0306, 0x045E},  // у + ˘ -> ў
    // Cyrillic diaeresis
    {0x0406, 0x0308, 0x0407},  // І + ¨ -> Ї
    {0x0456, 0x0308, 0x0457},  // і + ¨ -> ї
    {0x0415, 0x0308, 0x0401},  // Е + ¨ -> Ё
    {0x0435, 0x0308, 0x0451},  // е + ¨ -> ё
    // Cyrillic grave
    {0x0415, 0x0300, 0x0400},  // Е -> Ѐ
    {0x0435, 0x0300, 0x0450},  // е -> ѐ
    {0x0418, 0x0300, 0x040D},  // И -> Ѝ
    {0x0438, 0x0300, 0x045D},  // и -> ѝ
    // common Latin
    {0x0061, 0x0301, 0x00E1}, {0x0065, 0x0301, 0x00E9}, {0x0069, 0x0301, 0x00ED},
    {0x006F, 0x0301, 0x00F3}, {0x0075, 0x0301, 0x00FA}, {0x0041, 0x0301, 0x00C1},
    {0x0045, 0x0301, 0x00C9}, {0x0049, 0x0301, 0x00CD}, {0x004F, 0x0301, 0x00D3},
    {0x0055, 0x0301, 0x00DA},
}};

bool try_compose(CodePoint base, CodePoint mark, CodePoint& composed) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) {
      composed = c.composed;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<CodePoint> compose_nfc(std::vector<CodePoint> cps) {
  std::vector<CodePoint> out;
  out.reserve(cps.size());
  for (CodePoint cp : cps) {
    CodePoint composed;
    if (!out.empty() && is_combining_mark(cp) && try_compose(out.back(), cp, composed)) {
      out.back() = composed;
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

std::string normalize_nfc(std::string_view utf8) {
  return utf8_encode(compose_nfc(utf8_decode(utf8)));
}

bool is_whitespace(CodePoint cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_combining_mark(CodePoint cp) { return cp >= 0x0300 && cp <= 0x036F; }

bool is_letter(CodePoint cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // Latin-1
  if (cp >= 0x100 && cp <= 0x17F) return true;                            // Latin Extended-A
  if (cp >= 0x400 && cp <= 0x4FF) return true;                            // Cyrillic
  if (cp >= 0x500 && cp <= 0x52F) return true;                            // Cyrillic Supplement
  return false;
}

bool is_digit(CodePoint cp) { return cp >= '0' && cp <= '9'; }

bool is_uppercase_letter(CodePoint cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  if (cp >= 0x400 && cp <= 0x42F) return true;  // Ѐ..Џ, А..Я
  // Cyrillic extended letters come in upper/lower pairs, uppercase even.
  if (cp >= 0x460 && cp <= 0x481 && (cp % 2) == 0) return true;
  if (cp >= 0x48A && cp <= 0x52F && (cp % 2) == 0) return true;
  return false;
}

bool is_apostrophe(CodePoint cp) { return cp == 0x27 || cp == 0x2019 || cp == 0x2BC; }

bool is_hyphen(CodePoint cp) { return cp == 0x2D || cp == 0x2010 || cp == 0x2011; }

CodePoint to_lower(CodePoint cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // А..Я -> а..я
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;  // Ѐ..Џ -> ѐ..џ
  if (cp >= 0x460 && cp <= 0x481 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x48A && cp <= 0x52F && (cp % 2) == 0) return cp + 1;
  return cp;
}

std::string to_lower_utf8(std::string_view word) {
  auto cps = utf8_decode(word);
  for (auto& cp : cps) cp = to_lower(cp);
  return utf8_encode(cps);
}

bool is_vowel_letter(CodePoint cp) {
  switch (cp) {
    case 0x430:  // а
    case 0x435:  // е
    case 0x454:  // є
    case 0x438:  // и
    case 0x456:  // і
    case 0x457:  // ї
    case 0x43E:  // о
    case 0x443:  // у
    case 0x44E:  // ю
    case 0x44F:  // я
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

}  // namespace clausal
