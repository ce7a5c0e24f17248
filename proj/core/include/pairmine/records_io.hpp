#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pairmine/splitter.hpp"
#include "pairmine/types.hpp"

namespace pairmine {

// One record per line: pair_id, premise, hypothesis, label, corpus_id,
// genre, doc_id, premise_paragraph, premise_sentence, hypothesis_paragraph,
// hypothesis_sentence, matched_phrase (nullable), neutral_strategy
// (nullable), and stress_unmodified when a stress stage set it. Key order is
// fixed so identical pairs serialize to identical bytes.
nlohmann::ordered_json pair_to_json(const LabeledPair& pair);
LabeledPair pair_from_json(const nlohmann::json& j);

void write_pairs(const std::string& path, const std::vector<LabeledPair>& pairs);
std::vector<LabeledPair> read_pairs(const std::string& path);

// Split manifest file: config echo, per-cell counts, per-genre counts,
// document assignment, warnings.
void write_split_manifest(const std::string& path, const SplitManifest& manifest,
                          const SplitConfig& config,
                          const BalanceResult& balanced);

}  // namespace pairmine
