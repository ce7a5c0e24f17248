#include "pairmine/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairmine/rng.hpp"

namespace pairmine {

std::string_view to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  return "train";
}

std::optional<Split> split_from_string(std::string_view s) {
  for (Split sp : kAllSplits)
    if (to_string(sp) == s) return sp;
  return std::nullopt;
}

namespace {

void validate(const SplitConfig& c) {
  if (!(c.test_fraction > 0.0 && c.test_fraction < 1.0))
    throw std::invalid_argument("test fraction must be in (0,1)");
  if (!(c.val_fraction_of_remainder > 0.0 && c.val_fraction_of_remainder < 1.0))
    throw std::invalid_argument("val fraction must be in (0,1)");
  if (c.val_cap_per_corpus < 4 || c.test_cap_per_corpus < 4)
    throw std::invalid_argument("split caps must be at least 4");
}

}  // namespace

SplitManifest assign_documents(const std::vector<DocKey>& docs,
                               const SplitConfig& config) {
  validate(config);
  if (docs.empty()) throw std::invalid_argument("no documents to assign");

  std::map<std::string, std::pair<bool, std::vector<std::string>>> by_corpus;
  for (const auto& d : docs) {
    auto& entry = by_corpus[d.corpus_id];
    entry.first = entry.first || d.test_only;
    entry.second.push_back(d.doc_id);
  }

  SplitManifest manifest;
  for (auto& [corpus_id, entry] : by_corpus) {
    auto& [test_only, ids] = entry;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const std::size_t n = ids.size();

    if (test_only) {
      for (const auto& id : ids) manifest.assignment[{corpus_id, id}] = Split::test;
      continue;
    }
    if (n < 3) {
      manifest.warnings.push_back("corpus " + corpus_id + " has only " +
                                  std::to_string(n) +
                                  " document(s); all assigned to train");
      for (const auto& id : ids) manifest.assignment[{corpus_id, id}] = Split::train;
      continue;
    }

    std::mt19937_64 g(rng::hash64(config.seed, {corpus_id}));
    rng::shuffle(ids, g);
    const auto n_test = static_cast<std::size_t>(
        std::ceil(config.test_fraction * static_cast<double>(n)));
    const std::size_t rest = n - n_test;
    const auto n_val = static_cast<std::size_t>(
        std::ceil(config.val_fraction_of_remainder * static_cast<double>(rest)));
    for (std::size_t i = 0; i < n; ++i) {
      Split s = Split::train;
      if (i < n_test)
        s = Split::test;
      else if (i < n_test + n_val)
        s = Split::val;
      manifest.assignment[{corpus_id, ids[i]}] = s;
    }
  }
  return manifest;
}

BalanceResult balance_split(const std::vector<LabeledPair>& pairs,
                            SplitManifest& manifest, const SplitConfig& config) {
  validate(config);

  // (split, corpus) -> label -> pair indices
  std::map<std::pair<Split, std::string>, std::array<std::vector<std::size_t>, 4>>
      cells;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const auto it = manifest.assignment.find({p.corpus_id, p.doc_id});
    if (it == manifest.assignment.end())
      throw std::runtime_error("pair " + p.pair_id + " references document " +
                               p.doc_id + " with no split assignment");
    cells[{it->second, p.corpus_id}][static_cast<std::size_t>(p.label)].push_back(i);
  }

  BalanceResult result;
  manifest.counts.clear();
  for (auto& [key, by_label] : cells) {
    const auto& [split, corpus_id] = key;
    std::size_t m = by_label[0].size();
    for (const auto& v : by_label) m = std::min(m, v.size());
    if (m == 0) {
      result.dropped_cells.push_back(
          "cell (" + std::string(to_string(split)) + ", " + corpus_id +
          ") has an empty class; no pairs retained");
      for (Label l : kAllLabels) manifest.counts[{split, corpus_id, l}] = 0;
      continue;
    }
    if (split == Split::val)
      m = std::min(m, static_cast<std::size_t>(config.val_cap_per_corpus / 4));
    else if (split == Split::test)
      m = std::min(m, static_cast<std::size_t>(config.test_cap_per_corpus / 4));

    auto& out = split == Split::train ? result.train
                : split == Split::val ? result.val
                                      : result.test;
    for (Label label : kAllLabels) {
      auto& idxs = by_label[static_cast<std::size_t>(label)];
      std::sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
        return pairs[a].pair_id < pairs[b].pair_id;
      });
      std::mt19937_64 g(rng::hash64(
          config.seed, {to_string(split), corpus_id, to_string(label)}));
      auto picks = rng::sample_indices(g, idxs.size(), m);
      std::sort(picks.begin(), picks.end());
      for (std::size_t k : picks) out.push_back(pairs[idxs[k]]);
      manifest.counts[{split, corpus_id, label}] = static_cast<std::int64_t>(m);
    }
  }

  const auto by_corpus_then_id = [](const LabeledPair& a, const LabeledPair& b) {
    return std::tie(a.corpus_id, a.pair_id) < std::tie(b.corpus_id, b.pair_id);
  };
  std::sort(result.train.begin(), result.train.end(), by_corpus_then_id);
  std::sort(result.val.begin(), result.val.end(), by_corpus_then_id);
  std::sort(result.test.begin(), result.test.end(), by_corpus_then_id);
  return result;
}

}  // namespace pairmine
