#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

// Rule-based Spanish sentence segmentation.
//
// A boundary is a terminator (. ? !), optionally followed by closing quotes
// or brackets, followed by whitespace and then an uppercase letter, an
// opening punctuation mark (¿ ¡ " « ( [), or a digit; end of text always
// closes the last sentence. Periods after known abbreviations or
// single-letter initials never split, and a period flanked by digits
// (decimal numbers, section references) never splits.
class Segmenter {
 public:
  Segmenter();

  // Split one paragraph into trimmed, whitespace-collapsed sentences.
  // Sentences with no alphanumeric content are merged into the previous
  // sentence (or the next one when they open the paragraph).
  std::vector<std::string> split(std::string_view paragraph) const;

  // Segment every paragraph of a document, assigning location indices.
  std::vector<Sentence> segment(const Document& doc) const;

 private:
  bool is_abbreviation(std::string_view token) const;
  std::vector<std::string> abbreviations_;
};

}  // namespace pairmine
