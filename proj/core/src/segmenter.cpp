#include "pairmine/segmenter.hpp"

#include <algorithm>
#include <unordered_set>

#include "pairmine/utf8.hpp"

namespace pairmine {
namespace {

bool is_terminator(char32_t c) { return c == U'.' || c == U'?' || c == U'!'; }

bool is_closer(char32_t c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == U'»' ||
         c == U'”' || c == U'’';
}

bool is_opener(char32_t c) {
  return c == U'¿' || c == U'¡' || c == U'"' || c == U'\'' || c == U'(' ||
         c == U'[' || c == U'«' || c == U'“' || c == U'‘';
}

std::size_t prev_cp_start(std::string_view s, std::size_t pos) {
  std::size_t p = pos;
  do {
    --p;
  } while (p > 0 && (static_cast<unsigned char>(s[p]) & 0xc0) == 0x80);
  return p;
}

std::string normalize_word(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t c : cps) utf8::append(out, utf8::strip_accent(utf8::to_lower(c)));
  return out;
}

}  // namespace

Segmenter::Segmenter()
    : abbreviations_{"sr",  "sra", "dr",  "dra", "etc", "num",
                     "pag", "art", "inc", "ee",  "uu"} {}

bool Segmenter::is_abbreviation(std::string_view token) const {
  return std::find(abbreviations_.begin(), abbreviations_.end(), token) !=
         abbreviations_.end();
}

std::vector<std::string> Segmenter::split(std::string_view paragraph) const {
  const std::size_t n = paragraph.size();
  std::vector<std::pair<std::size_t, std::size_t>> slices;
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < n) {
    const auto d = utf8::decode(paragraph, i);
    if (!is_terminator(d.cp)) {
      i += static_cast<std::size_t>(d.len);
      continue;
    }
    const std::size_t run_start = i;
    std::size_t j = i;
    int terminators = 0;
    int periods = 0;
    while (j < n) {
      const auto dj = utf8::decode(paragraph, j);
      if (!is_terminator(dj.cp)) break;
      ++terminators;
      if (dj.cp == U'.') ++periods;
      j += static_cast<std::size_t>(dj.len);
    }
    while (j < n) {
      const auto dj = utf8::decode(paragraph, j);
      if (!is_closer(dj.cp)) break;
      j += static_cast<std::size_t>(dj.len);
    }

    bool boundary = false;
    if (j >= n) {
      boundary = true;
    } else {
      std::size_t k = j;
      bool saw_space = false;
      while (k < n) {
        const auto dk = utf8::decode(paragraph, k);
        if (!utf8::is_space(dk.cp)) break;
        saw_space = true;
        k += static_cast<std::size_t>(dk.len);
      }
      if (saw_space) {
        if (k >= n) {
          boundary = true;
        } else {
          std::size_t m = k;
          while (m < n) {
            const auto dm = utf8::decode(paragraph, m);
            if (!is_opener(dm.cp)) break;
            m += static_cast<std::size_t>(dm.len);
          }
          if (m < n) {
            const auto dm = utf8::decode(paragraph, m);
            if (utf8::is_upper(dm.cp) || utf8::is_digit(dm.cp)) boundary = true;
          }
        }
      }
    }

    if (boundary && terminators == 1 && periods == 1) {
      std::size_t wstart = run_start;
      while (wstart > 0) {
        const std::size_t ps = prev_cp_start(paragraph, wstart);
        const auto dp = utf8::decode(paragraph, ps);
        if (!utf8::is_alpha(dp.cp)) break;
        wstart = ps;
      }
      if (wstart < run_start) {
        const auto cps = utf8::decode_all(paragraph.substr(wstart, run_start - wstart));
        const bool initial = cps.size() == 1 && utf8::is_upper(cps[0]);
        if (initial || is_abbreviation(normalize_word(cps))) boundary = false;
      }
    }

    if (boundary) {
      slices.emplace_back(begin, j);
      begin = j;
    }
    i = j;
  }
  if (begin < n) slices.emplace_back(begin, n);

  std::vector<std::string> cleaned;
  for (const auto& [b, e] : slices) {
    std::string s = utf8::collapse_whitespace(utf8::trim(paragraph.substr(b, e - b)));
    if (!s.empty()) cleaned.push_back(std::move(s));
  }

  std::vector<std::string> out;
  std::string pending;
  for (auto& s : cleaned) {
    if (!utf8::has_alnum(s)) {
      if (!out.empty()) {
        out.back() += ' ';
        out.back() += s;
      } else {
        if (!pending.empty()) pending += ' ';
        pending += s;
      }
      continue;
    }
    if (!pending.empty()) {
      s = pending + ' ' + s;
      pending.clear();
    }
    out.push_back(std::move(s));
  }
  if (!pending.empty()) {
    if (!out.empty()) {
      out.back() += ' ';
      out.back() += pending;
    }
    // a paragraph with no alphanumeric content yields no sentences
  }
  return out;
}

std::vector<Sentence> Segmenter::segment(const Document& doc) const {
  std::vector<Sentence> out;
  for (std::size_t pi = 0; pi < doc.paragraphs.size(); ++pi) {
    const auto sentences = split(doc.paragraphs[pi]);
    for (std::size_t si = 0; si < sentences.size(); ++si) {
      Sentence s;
      s.text = sentences[si];
      s.doc_id = doc.doc_id;
      s.paragraph_index = static_cast<int>(pi);
      s.sentence_index = static_cast<int>(si);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace pairmine
