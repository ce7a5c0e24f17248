#include "pairmine/utf8.hpp"

namespace pairmine::utf8 {

Decoded decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) -> bool {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto cb = [&](std::size_t k) -> char32_t {
    return static_cast<unsigned char>(s[i + k]) & 0x3F;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = ((b0 & 0x1Fu) << 6) | cb(1);
    if (cp >= 0x80) return {cp, 2};
  } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = ((b0 & 0x0Fu) << 12) | (cb(1) << 6) | cb(2);
    if (cp >= 0x800) return {cp, 3};
  } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = ((b0 & 0x07u) << 18) | (cb(1) << 12) | (cb(2) << 6) | cb(3);
    if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
  }
  return {b0, 1};  // invalid sequence: latin-1 fallback
}

void append(std::string& out, char32_t cp) {
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

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::vector<char32_t> decode_all(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    auto [cp, len] = decode(s, i);
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || cp == 0x2009 || cp == 0x200A || cp == 0x2002 ||
         cp == 0x2003 || cp == 0x3000;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_alpha(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // latin-1 letters
  if (cp >= 0x100 && cp <= 0x17F) return true;                           // latin extended-A
  if (cp >= 0x180 && cp <= 0x24F) return true;                           // latin extended-B
  return false;
}

bool is_upper(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  return false;
}

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
           (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
  }
  switch (cp) {
    case 0xA1:    // ¡
    case 0xBF:    // ¿
    case 0xAB:    // «
    case 0xBB:    // »
    case 0x2013:  // –
    case 0x2014:  // —
    case 0x2018:  // '
    case 0x2019:  // '
    case 0x201C:  // "
    case 0x201D:  // "
    case 0x2026:  // …
    case 0xB7:    // ·
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  return cp;
}

char32_t strip_accent(char32_t cp) {
  switch (cp) {
    case 0xE1: case 0xE0: case 0xE2: case 0xE4: case 0xE3: return 'a';
    case 0xE9: case 0xE8: case 0xEA: case 0xEB: return 'e';
    case 0xED: case 0xEC: case 0xEE: case 0xEF: return 'i';
    case 0xF3: case 0xF2: case 0xF4: case 0xF6: case 0xF5: return 'o';
    case 0xFA: case 0xF9: case 0xFB: case 0xFC: return 'u';
    default: return cp;  // ñ and everything else preserved
  }
}

namespace {

// base letter x combining mark -> precomposed codepoint
char32_t compose(char32_t base, char32_t mark) {
  switch (mark) {
    case 0x0301:  // acute
      switch (base) {
        case 'a': return 0xE1; case 'e': return 0xE9; case 'i': return 0xED;
        case 'o': return 0xF3; case 'u': return 0xFA;
        case 'A': return 0xC1; case 'E': return 0xC9; case 'I': return 0xCD;
        case 'O': return 0xD3; case 'U': return 0xDA;
        case 'y': return 0xFD; case 'Y': return 0xDD;
      }
      break;
    case 0x0300:  // grave
      switch (base) {
        case 'a': return 0xE0; case 'e': return 0xE8; case 'i': return 0xEC;
        case 'o': return 0xF2; case 'u': return 0xF9;
        case 'A': return 0xC0; case 'E': return 0xC8; case 'I': return 0xCC;
        case 'O': return 0xD2; case 'U': return 0xD9;
      }
      break;
    case 0x0302:  // circumflex
      switch (base) {
        case 'a': return 0xE2; case 'e': return 0xEA; case 'i': return 0xEE;
        case 'o': return 0xF4; case 'u': return 0xFB;
        case 'A': return 0xC2; case 'E': return 0xCA; case 'I': return 0xCE;
        case 'O': return 0xD4; case 'U': return 0xDB;
      }
      break;
    case 0x0303:  // tilde
      switch (base) {
        case 'n': return 0xF1; case 'N': return 0xD1;
        case 'a': return 0xE3; case 'o': return 0xF5;
        case 'A': return 0xC3; case 'O': return 0xD5;
      }
      break;
    case 0x0308:  // diaeresis
      switch (base) {
        case 'a': return 0xE4; case 'e': return 0xEB; case 'i': return 0xEF;
        case 'o': return 0xF6; case 'u': return 0xFC;
        case 'A': return 0xC4; case 'E': return 0xCB; case 'I': return 0xCF;
        case 'O': return 0xD6; case 'U': return 0xDC;
      }
      break;
    case 0x0327:  // cedilla
      if (base == 'c') return 0xE7;
      if (base == 'C') return 0xC7;
      break;
  }
  return 0;
}

}  // namespace

std::string nfc(std::string_view s) {
  // Fast path: no combining marks.
  bool has_mark = false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    // U+0300..U+036F encode as 0xCC 0x80..0xCD 0xAF
    auto b = static_cast<unsigned char>(s[i]);
    if (b == 0xCC || b == 0xCD) { has_mark = true; break; }
  }
  if (!has_mark) return std::string(s);

  auto cps = decode_all(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp >= 0x0300 && cp <= 0x036F && !out.empty()) {
      if (char32_t composed = compose(out.back(), cp); composed != 0) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return encode(out);
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < s.size();) {
    auto [cp, len] = decode(s, i);
    if (is_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(s.substr(i, static_cast<std::size_t>(len)));
    }
    i += static_cast<std::size_t>(len);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    auto [cp, len] = decode(s, begin);
    if (!is_space(cp)) break;
    begin += static_cast<std::size_t>(len);
  }
  std::size_t end = s.size();
  while (end > begin) {
    // walk back over one codepoint: find its start byte
    std::size_t start = end - 1;
    while (start > begin && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) --start;
    auto [cp, len] = decode(s, start);
    if (!is_space(cp) || start + static_cast<std::size_t>(len) != end) break;
    end = start;
  }
  return std::string(s.substr(begin, end - begin));
}

bool has_alnum(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    auto [cp, len] = decode(s, i);
    if (is_alpha(cp) || is_digit(cp)) return true;
    i += static_cast<std::size_t>(len);
  }
  return false;
}

}  // namespace pairmine::utf8
