#include "pairmine/records_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "pairmine/utf8.hpp"

namespace pairmine {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson pair_to_json(const LabeledPair& p) {
  ojson j;
  j["pair_id"] = p.pair_id;
  j["premise"] = p.premise;
  j["hypothesis"] = p.hypothesis;
  j["label"] = std::string(to_string(p.label));
  j["corpus_id"] = p.corpus_id;
  j["genre"] = std::string(to_string(p.genre));
  j["doc_id"] = p.doc_id;
  j["premise_paragraph"] = p.premise_loc.paragraph;
  j["premise_sentence"] = p.premise_loc.sentence;
  j["hypothesis_paragraph"] = p.hypothesis_loc.paragraph;
  j["hypothesis_sentence"] = p.hypothesis_loc.sentence;
  if (p.matched_phrase)
    j["matched_phrase"] = *p.matched_phrase;
  else
    j["matched_phrase"] = nullptr;
  if (p.neutral_strategy)
    j["neutral_strategy"] = std::string(to_string(*p.neutral_strategy));
  else
    j["neutral_strategy"] = nullptr;
  if (p.stress_unmodified) j["stress_unmodified"] = *p.stress_unmodified;
  return j;
}

LabeledPair pair_from_json(const json& j) {
  const auto need = [&](const char* key) -> const json& {
    if (!j.contains(key))
      throw std::runtime_error("pair record missing field " + std::string(key));
    return j.at(key);
  };
  LabeledPair p;
  p.pair_id = need("pair_id").get<std::string>();
  p.premise = need("premise").get<std::string>();
  p.hypothesis = need("hypothesis").get<std::string>();
  const auto label = label_from_string(need("label").get<std::string>());
  if (!label) throw std::runtime_error("unknown label in pair record");
  p.label = *label;
  p.corpus_id = need("corpus_id").get<std::string>();
  const auto genre = genre_from_string(need("genre").get<std::string>());
  if (!genre) throw std::runtime_error("unknown genre in pair record");
  p.genre = *genre;
  p.doc_id = need("doc_id").get<std::string>();
  p.premise_loc = {need("premise_paragraph").get<int>(),
                   need("premise_sentence").get<int>()};
  p.hypothesis_loc = {need("hypothesis_paragraph").get<int>(),
                      need("hypothesis_sentence").get<int>()};
  if (j.contains("matched_phrase") && !j["matched_phrase"].is_null())
    p.matched_phrase = j["matched_phrase"].get<std::string>();
  if (j.contains("neutral_strategy") && !j["neutral_strategy"].is_null()) {
    const auto s = strategy_from_string(j["neutral_strategy"].get<std::string>());
    if (!s) throw std::runtime_error("unknown neutral strategy in pair record");
    p.neutral_strategy = s;
  }
  if (j.contains("stress_unmodified") && !j["stress_unmodified"].is_null())
    p.stress_unmodified = j["stress_unmodified"].get<bool>();
  return p;
}

void write_pairs(const std::string& path, const std::vector<LabeledPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write pairs file: " + path);
  for (const auto& p : pairs) out << pair_to_json(p).dump() << "\n";
}

std::vector<LabeledPair> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pairs file: " + path);
  std::vector<LabeledPair> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw std::runtime_error("pairs " + path + " line " + std::to_string(lineno) +
                               ": invalid record");
    try {
      pairs.push_back(pair_from_json(j));
    } catch (const std::exception& e) {
      throw std::runtime_error("pairs " + path + " line " + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  return pairs;
}

void write_split_manifest(const std::string& path, const SplitManifest& manifest,
                          const SplitConfig& config,
                          const BalanceResult& balanced) {
  ojson j;
  j["config"] = {{"test_fraction", config.test_fraction},
                 {"val_fraction_of_remainder", config.val_fraction_of_remainder},
                 {"val_cap_per_corpus", config.val_cap_per_corpus},
                 {"test_cap_per_corpus", config.test_cap_per_corpus},
                 {"seed", config.seed}};

  j["cells"] = ojson::array();
  for (const auto& [key, count] : manifest.counts) {
    const auto& [split, corpus_id, label] = key;
    ojson cell;
    cell["split"] = std::string(to_string(split));
    cell["corpus_id"] = corpus_id;
    cell["label"] = std::string(to_string(label));
    cell["count"] = count;
    j["cells"].push_back(std::move(cell));
  }

  std::map<std::pair<std::string, Genre>, std::int64_t> genre_counts;
  const auto tally = [&genre_counts](const std::vector<LabeledPair>& pairs,
                                     Split split) {
    for (const auto& p : pairs)
      ++genre_counts[{std::string(to_string(split)), p.genre}];
  };
  tally(balanced.train, Split::train);
  tally(balanced.val, Split::val);
  tally(balanced.test, Split::test);
  j["genres"] = ojson::array();
  for (const auto& [key, count] : genre_counts) {
    ojson row;
    row["split"] = key.first;
    row["genre"] = std::string(to_string(key.second));
    row["count"] = count;
    j["genres"].push_back(std::move(row));
  }

  j["assignment"] = ojson::array();
  for (const auto& [key, split] : manifest.assignment) {
    ojson row;
    row["corpus_id"] = key.first;
    row["doc_id"] = key.second;
    row["split"] = std::string(to_string(split));
    j["assignment"].push_back(std::move(row));
  }

  j["warnings"] = manifest.warnings;
  j["dropped_cells"] = balanced.dropped_cells;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write split manifest: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace pairmine
