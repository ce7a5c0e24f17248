#include "pairmine/types.hpp"

#include "pairmine/rng.hpp"

namespace pairmine {

std::string_view to_string(Genre g) {
  switch (g) {
    case Genre::articles: return "articles";
    case Genre::books: return "books";
    case Genre::comments: return "comments";
    case Genre::legal: return "legal";
    case Genre::clinical: return "clinical";
    case Genre::news: return "news";
    case Genre::talks: return "talks";
    case Genre::theses: return "theses";
  }
  return "articles";
}

std::optional<Genre> genre_from_string(std::string_view s) {
  for (Genre g : kAllGenres)
    if (to_string(g) == s) return g;
  return std::nullopt;
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::contrasting: return "contrasting";
    case Label::entailment: return "entailment";
    case Label::neutral: return "neutral";
    case Label::reasoning: return "reasoning";
  }
  return "neutral";
}

std::optional<Label> label_from_string(std::string_view s) {
  for (Label l : kAllLabels)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::string_view to_string(NeutralStrategy s) {
  switch (s) {
    case NeutralStrategy::both_random: return "both_random";
    case NeutralStrategy::first_random: return "first_random";
    case NeutralStrategy::second_random: return "second_random";
    case NeutralStrategy::both_entailed: return "both_entailed";
  }
  return "both_random";
}

std::optional<NeutralStrategy> strategy_from_string(std::string_view s) {
  for (NeutralStrategy st : kAllStrategies)
    if (to_string(st) == s) return st;
  return std::nullopt;
}

std::string make_pair_id(std::string_view corpus_id, std::string_view doc_id,
                         SentenceLoc premise_loc, SentenceLoc hypothesis_loc, Label label) {
  std::uint64_t h = rng::kFnvOffset;
  h = rng::fnv1a64(corpus_id, h);
  h = rng::fnv1a64("\x1f", h);
  h = rng::fnv1a64(doc_id, h);
  h = rng::fnv1a64("\x1f", h);
  h = rng::fnv1a64_u64(static_cast<std::uint64_t>(premise_loc.paragraph), h);
  h = rng::fnv1a64_u64(static_cast<std::uint64_t>(premise_loc.sentence), h);
  h = rng::fnv1a64_u64(static_cast<std::uint64_t>(hypothesis_loc.paragraph), h);
  h = rng::fnv1a64_u64(static_cast<std::uint64_t>(hypothesis_loc.sentence), h);
  h = rng::fnv1a64(to_string(label), h);
  return rng::to_hex16(h);
}

}  // namespace pairmine
