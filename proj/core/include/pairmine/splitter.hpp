#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

enum class Split { train, val, test };

inline constexpr std::array<Split, 3> kAllSplits = {Split::train, Split::val,
                                                    Split::test};

std::string_view to_string(Split s);
std::optional<Split> split_from_string(std::string_view s);

struct SplitConfig {
  double test_fraction = 0.1;
  double val_fraction_of_remainder = 0.1;
  int val_cap_per_corpus = 15000;
  int test_cap_per_corpus = 15000;
  std::uint64_t seed = 0;
};

struct DocKey {
  std::string corpus_id;
  std::string doc_id;
  bool test_only = false;
};

struct SplitManifest {
  std::map<std::pair<std::string, std::string>, Split> assignment;
  std::map<std::tuple<Split, std::string, Label>, std::int64_t> counts;
  std::vector<std::string> warnings;
};

// Document-level split assignment: test-only corpora route entirely to test;
// a corpus under 3 documents goes entirely to train with a warning; other
// corpora get a seeded shuffle, then ceil(test_fraction * n) documents to
// test and ceil(val_fraction_of_remainder * rest) to val. Throws on
// fractions outside (0,1) or caps below 4.
SplitManifest assign_documents(const std::vector<DocKey>& docs,
                               const SplitConfig& config);

struct BalanceResult {
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> val;
  std::vector<LabeledPair> test;  // each sorted by (corpus_id, pair_id)
  std::vector<std::string> dropped_cells;
};

// Per (split, corpus) cell, downsample every label to the cell's minimum
// label count, additionally capped at cap/4 for val and test. Sampling is
// uniform without replacement, seeded per cell and label. Fills
// manifest.counts with the retained counts. Throws when a pair's document
// has no assignment.
BalanceResult balance_split(const std::vector<LabeledPair>& pairs,
                            SplitManifest& manifest, const SplitConfig& config);

}  // namespace pairmine
