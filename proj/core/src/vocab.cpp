#include "pairmine/vocab.hpp"

#include <algorithm>
#include <map>

#include "pairmine/utf8.hpp"

namespace pairmine {

std::vector<std::string> feature_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto d = utf8::decode(text, i);
    if (utf8::is_alpha(d.cp) || utf8::is_digit(d.cp)) {
      utf8::append(current, utf8::to_lower(d.cp));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
    i += static_cast<std::size_t>(d.len);
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

Vocabulary Vocabulary::build(const std::vector<LabeledPair>& train_pairs,
                             const VocabConfig& config) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& p : train_pairs) {
    for (auto& t : feature_tokens(p.premise)) ++counts[t];
    for (auto& t : feature_tokens(p.hypothesis)) ++counts[t];
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked;
  for (auto& [token, count] : counts)
    if (count >= config.min_count) ranked.emplace_back(token, count);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (config.max_size >= 0 &&
      ranked.size() > static_cast<std::size_t>(config.max_size))
    ranked.resize(static_cast<std::size_t>(config.max_size));

  std::vector<std::string> tokens;
  tokens.reserve(ranked.size());
  for (auto& [token, count] : ranked) tokens.push_back(std::move(token));
  return from_tokens(std::move(tokens));
}

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens_in_index_order) {
  Vocabulary v;
  v.tokens_ = std::move(tokens_in_index_order);
  v.index_.reserve(v.tokens_.size());
  for (std::size_t i = 0; i < v.tokens_.size(); ++i) v.index_[v.tokens_[i]] = i;
  return v;
}

std::int64_t Vocabulary::index_of(const std::string& token) const {
  const auto it = index_.find(token);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

SparseVector featurize(const LabeledPair& pair, const Vocabulary& vocab,
                       bool premise_only) {
  std::map<std::size_t, float> counts;
  for (const auto& t : feature_tokens(pair.premise)) {
    const auto idx = vocab.index_of(t);
    if (idx >= 0) counts[static_cast<std::size_t>(idx)] += 1.0f;
  }
  if (!premise_only) {
    for (const auto& t : feature_tokens(pair.hypothesis)) {
      const auto idx = vocab.index_of(t);
      if (idx >= 0) counts[vocab.size() + static_cast<std::size_t>(idx)] += 1.0f;
    }
  }
  return SparseVector(counts.begin(), counts.end());
}

}  // namespace pairmine
