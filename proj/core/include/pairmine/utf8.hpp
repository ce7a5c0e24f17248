#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 handling tuned for Spanish text. Covers ASCII plus the
// Latin-1 / Latin Extended-A letters; everything else passes through
// classification as "other".
namespace pairmine::utf8 {

struct Decoded {
  char32_t cp;
  int len;  // bytes consumed, >= 1
};

// Decodes the codepoint starting at byte i. Invalid bytes decode as a
// single-byte codepoint (latin-1 fallback) so malformed input never stalls.
Decoded decode(std::string_view s, std::size_t i);

void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);
std::vector<char32_t> decode_all(std::string_view s);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_alpha(char32_t cp);
bool is_upper(char32_t cp);
bool is_punct(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

// á→a, é→e, ... (grave/circumflex/diaeresis variants included); ñ preserved.
char32_t strip_accent(char32_t cp);

// Canonical composition for Latin base letter + combining mark sequences
// (U+0300 grave, U+0301 acute, U+0302 circumflex, U+0303 tilde, U+0308
// diaeresis). Covers all Spanish orthography; other sequences pass through.
std::string nfc(std::string_view s);

// Collapses whitespace runs to single spaces and trims both ends.
std::string collapse_whitespace(std::string_view s);

std::string trim(std::string_view s);

// True when the string contains at least one letter or digit codepoint.
bool has_alnum(std::string_view s);

}  // namespace pairmine::utf8
