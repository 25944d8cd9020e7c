#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csw {

enum class Lang { Arabic, English, Other };

const char* to_string(Lang lang);

// Script classification of a single whitespace-free surface form.
// `mixed` marks surfaces carrying both Arabic and Latin letters (clitic
// attachments); those classify as English.
struct ScriptClass {
  Lang lang = Lang::Other;
  bool mixed = false;
};

ScriptClass classify_surface(std::string_view surface);  // UsageError on empty
Lang classify_token(std::string_view surface);

struct Token {
  std::string surface;
  Lang lang = Lang::Other;
  int index = 0;
  bool mixed_script = false;
};

Token make_token(std::string surface, int index);
std::vector<Token> tokenize_line(std::string_view line);
std::string detokenize(std::span<const Token> tokens);

// True iff the sequence holds at least one Arabic and one English token.
bool is_csw(std::span<const Token> tokens);

// Code-point helpers, exposed for tests.
bool is_arabic_letter(uint32_t cp);
bool is_latin_letter(uint32_t cp);
bool is_digit_cp(uint32_t cp);
// Lossy decoder: invalid bytes map to U+FFFD so classification stays total.
std::vector<uint32_t> decode_utf8(std::string_view s);
std::string encode_utf8(const std::vector<uint32_t>& cps);

}  // namespace csw
