#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

// Lowercased alphanumeric tokens; punctuation dropped, accents kept.
std::vector<std::string> feature_tokens(std::string_view text);

struct VocabConfig {
  int min_count = 1;
  int max_size = 50000;
};

// Token -> dense index map built from the training split only, ordered by
// frequency with lexicographic tie-break.
class Vocabulary {
 public:
  static Vocabulary build(const std::vector<LabeledPair>& train_pairs,
                          const VocabConfig& config);
  static Vocabulary from_tokens(std::vector<std::string> tokens_in_index_order);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  // -1 when out of vocabulary.
  std::int64_t index_of(const std::string& token) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SparseVector = std::vector<std::pair<std::size_t, float>>;

// Two-block bag of words: premise counts in [0, V), hypothesis counts in
// [V, 2V). premise_only leaves the hypothesis block empty so it is a strict
// feature ablation. Indices strictly increasing.
SparseVector featurize(const LabeledPair& pair, const Vocabulary& vocab,
                       bool premise_only);

}  // namespace pairmine
