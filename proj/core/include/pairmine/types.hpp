#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pairmine {

enum class Genre { articles, books, comments, legal, clinical, news, talks, theses };

inline constexpr std::array<Genre, 8> kAllGenres = {
    Genre::articles, Genre::books, Genre::comments, Genre::legal,
    Genre::clinical, Genre::news,  Genre::talks,    Genre::theses};

std::string_view to_string(Genre g);
std::optional<Genre> genre_from_string(std::string_view s);

// Fixed class order everywhere: contrasting, entailment, neutral, reasoning.
enum class Label { contrasting, entailment, neutral, reasoning };

inline constexpr int kNumLabels = 4;
inline constexpr std::array<Label, 4> kAllLabels = {
    Label::contrasting, Label::entailment, Label::neutral, Label::reasoning};

std::string_view to_string(Label l);
std::optional<Label> label_from_string(std::string_view s);

enum class NeutralStrategy { both_random, first_random, second_random, both_entailed };

inline constexpr std::array<NeutralStrategy, 4> kAllStrategies = {
    NeutralStrategy::both_random, NeutralStrategy::first_random,
    NeutralStrategy::second_random, NeutralStrategy::both_entailed};

std::string_view to_string(NeutralStrategy s);
std::optional<NeutralStrategy> strategy_from_string(std::string_view s);

struct SentenceLoc {
  int paragraph = 0;
  int sentence = 0;
  auto operator<=>(const SentenceLoc&) const = default;
};

struct Document {
  std::string doc_id;
  std::string corpus_id;
  Genre genre = Genre::articles;
  std::vector<std::string> paragraphs;
};

struct Sentence {
  std::string text;
  std::string doc_id;
  int paragraph_index = 0;
  int sentence_index = 0;
};

struct CorpusManifest {
  std::string corpus_id;
  Genre genre = Genre::articles;
  bool test_only = false;
  std::string source_path;
};

struct LabeledPair {
  std::string pair_id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::neutral;
  std::string corpus_id;
  Genre genre = Genre::articles;
  std::string doc_id;
  SentenceLoc premise_loc;
  SentenceLoc hypothesis_loc;
  std::optional<std::string> matched_phrase;           // absent for neutral
  std::optional<NeutralStrategy> neutral_strategy;     // present iff neutral
  std::optional<bool> stress_unmodified;               // spelling stress output only
};

// Stable id: pure function of (corpus_id, doc_id, premise_loc, hypothesis_loc, label).
std::string make_pair_id(std::string_view corpus_id, std::string_view doc_id,
                         SentenceLoc premise_loc, SentenceLoc hypothesis_loc, Label label);

}  // namespace pairmine
