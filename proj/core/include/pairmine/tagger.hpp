#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pairmine {

enum class PosTag { NOUN, PRON, PROPN, AUX, VERB, ADJ, ADV, DET, ADP, NUM, PUNCT, OTHER };

std::string_view to_string(PosTag t);
std::optional<PosTag> pos_tag_from_string(std::string_view s);

struct TaggedToken {
  std::string token;
  PosTag tag = PosTag::OTHER;
};

// Pluggable tagging capability. Implementations must be deterministic and
// tokenize so that concatenating tokens (ignoring whitespace) reproduces the
// sentence's non-whitespace characters.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TaggedToken> tag_tokens(std::string_view sentence) const = 0;
};

// Rule-based Spanish tagger: closed-class lookups (determiners, pronouns,
// ser/estar/haber forms, prepositions, conjunctions, core adverbs, frequent
// finite verbs), then verb suffix heuristics, -mente adverbs, capitalization
// (PROPN only off sentence start), digits, punctuation; everything else NOUN.
class RuleTagger : public Tagger {
 public:
  std::vector<TaggedToken> tag_tokens(std::string_view sentence) const override;
};

// True iff one token tags to {NOUN, PRON, PROPN} and one to {AUX, VERB}.
bool is_complete(const std::vector<TaggedToken>& tokens);
bool is_complete(std::string_view sentence, const Tagger& tagger);

}  // namespace pairmine
