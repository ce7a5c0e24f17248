#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

struct PhraseMatch {
  Label label = Label::contrasting;
  std::string phrase;        // canonical (lowercase, accent-stripped) form
  std::size_t span_begin = 0;
  std::size_t span_end = 0;  // byte range in the original sentence, phrase
                             // plus any following comma and whitespace
};

// Lowercase, strip accents (ñ kept), collapse whitespace runs, trim.
std::string normalize_phrase(std::string_view text);

class LinkingLexicon {
 public:
  // Built-in phrase lists: 8 contrasting, 31 entailment, 10 reasoning.
  static LinkingLexicon builtin();

  // Override file: one record per line with "class" and "phrase" fields.
  // Replaces the built-in lists entirely. Throws on malformed records,
  // unknown classes, neutral entries, or duplicate phrases across classes.
  static LinkingLexicon from_file(const std::string& path);

  const std::vector<std::string>& phrases(Label label) const;
  std::size_t size() const;

  // Longest phrase at the start of the sentence, matched accent- and
  // case-insensitively on whole-word boundaries (phrase followed by end,
  // comma, or space). The span covers the original bytes of the phrase plus
  // one optional comma and any following whitespace.
  std::optional<PhraseMatch> match_sentence_start(std::string_view sentence) const;

  // Sentence with the matched span removed and the first remaining
  // character uppercased; nullopt when nothing remains (degenerate).
  static std::optional<std::string> strip_match(std::string_view sentence,
                                                const PhraseMatch& match);

 private:
  LinkingLexicon() = default;
  void add(Label label, std::string phrase);
  std::vector<std::string> contrasting_;
  std::vector<std::string> entailment_;
  std::vector<std::string> reasoning_;
  std::vector<std::string> empty_;
};

}  // namespace pairmine
