#include "csw/langid.hpp"

#include "csw/errors.hpp"
#include "csw/textio.hpp"

namespace csw {

const char* to_string(Lang lang) {
  switch (lang) {
    case Lang::Arabic: return "ar";
    case Lang::English: return "en";
    case Lang::Other: return "other";
  }
  return "other";
}

std::vector<uint32_t> decode_utf8(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b = s[i];
    uint32_t cp = 0xFFFD;
    size_t len = 1;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (size_t k = 1; k < len; ++k) {
      unsigned char cont = s[i + k];
      if ((cont & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (!ok || (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF) {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

std::string encode_utf8(const std::vector<uint32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (uint32_t cp : cps) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }
  return out;
}

bool is_digit_cp(uint32_t cp) {
  return (cp >= '0' && cp <= '9') ||            // ASCII
         (cp >= 0x0660 && cp <= 0x0669) ||      // Arabic-Indic
         (cp >= 0x06F0 && cp <= 0x06F9);        // extended Arabic-Indic
}

bool is_arabic_letter(uint32_t cp) {
  // Letter ranges only: digits, diacritics, and Arabic punctuation in the
  // same blocks stay language-independent.
  if (cp >= 0x0620 && cp <= 0x064A) return true;  // hamza..yeh, incl. tatweel
  if (cp >= 0x066E && cp <= 0x066F) return true;
  if (cp >= 0x0671 && cp <= 0x06D3) return true;
  if (cp == 0x06D5) return true;
  if (cp >= 0x06EE && cp <= 0x06EF) return true;
  if (cp >= 0x06FA && cp <= 0x06FF) return true;
  if (cp >= 0x0750 && cp <= 0x077F) return true;  // supplement
  if (cp >= 0x08A0 && cp <= 0x08FF) return true;  // extended-A
  if (cp >= 0xFB50 && cp <= 0xFDFF) return true;  // presentation forms A
  if (cp >= 0xFE70 && cp <= 0xFEFF) return true;  // presentation forms B
  return false;
}

bool is_latin_letter(uint32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

ScriptClass classify_surface(std::string_view surface) {
  if (surface.empty()) throw UsageError("cannot classify an empty token");
  bool arabic = false;
  bool latin = false;
  for (uint32_t cp : decode_utf8(surface)) {
    if (is_arabic_letter(cp)) arabic = true;
    else if (is_latin_letter(cp)) latin = true;
  }
  if (arabic && latin) return {Lang::English, true};
  if (arabic) return {Lang::Arabic, false};
  if (latin) return {Lang::English, false};
  return {Lang::Other, false};
}

Lang classify_token(std::string_view surface) {
  return classify_surface(surface).lang;
}

Token make_token(std::string surface, int index) {
  for (char c : surface)
    if (c == ' ' || c == '\t' || c == '\n')
      throw UsageError("token surface contains whitespace: '" + surface + "'");
  ScriptClass cls = classify_surface(surface);
  return Token{std::move(surface), cls.lang, index, cls.mixed};
}

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  auto parts = split_ws(line);
  tokens.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i)
    tokens.push_back(make_token(std::move(parts[i]), static_cast<int>(i)));
  return tokens;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

bool is_csw(std::span<const Token> tokens) {
  bool arabic = false;
  bool english = false;
  for (const Token& t : tokens) {
    if (t.lang == Lang::Arabic) arabic = true;
    else if (t.lang == Lang::English) english = true;
    if (arabic && english) return true;
  }
  return false;
}

}  // namespace csw
