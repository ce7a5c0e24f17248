#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairmine/lexicon.hpp"
#include "pairmine/segmenter.hpp"
#include "pairmine/tagger.hpp"
#include "pairmine/types.hpp"

namespace pairmine {

// Token tags supplied from a file, keyed by sentence location. Sentences
// absent from the file fall back to the built-in tagger.
class ExternalTags {
 public:
  static ExternalTags from_file(const std::string& path);
  const std::vector<TaggedToken>* find(const std::string& doc_id, int paragraph,
                                       int sentence) const;
  std::size_t size() const { return by_loc_.size(); }

 private:
  std::map<std::tuple<std::string, int, int>, std::vector<TaggedToken>> by_loc_;
};

struct ExtractionStats {
  std::int64_t documents = 0;
  std::int64_t linked_candidates = 0;
  std::int64_t emitted_linked = 0;
  std::int64_t emitted_neutral = 0;
  std::int64_t dropped_degenerate = 0;
  std::int64_t dropped_premise_incomplete = 0;
  std::int64_t dropped_hypothesis_incomplete = 0;
  std::int64_t dropped_duplicate_text = 0;
  std::int64_t neutral_shortfall = 0;
  std::int64_t skipped_records = 0;

  ExtractionStats& operator+=(const ExtractionStats& o);
};

struct ExtractorConfig {
  double neutral_ratio = 1.0;
  std::uint64_t seed = 0;
  const LinkingLexicon* lexicon = nullptr;   // required
  const Tagger* tagger = nullptr;            // required
  const ExternalTags* external_tags = nullptr;  // optional
};

struct DocumentPairs {
  std::vector<LabeledPair> pairs;
  ExtractionStats stats;
};

// Linked pairs from adjacent same-paragraph sentences, then neutral pairs
// with target round(neutral_ratio * linked count), deterministically seeded
// per document by hash(seed, doc_id). Output sorted by
// (hypothesis_loc, premise_loc, label).
DocumentPairs extract_document(const Document& doc, const Segmenter& segmenter,
                               const ExtractorConfig& config);

// Every document of a corpus, concurrently when threads > 1; output sorted
// by (doc_id, hypothesis_loc, premise_loc, label) and independent of the
// thread count.
struct CorpusPairs {
  std::vector<LabeledPair> pairs;
  ExtractionStats stats;
};
CorpusPairs extract_corpus(const std::vector<Document>& documents,
                           const Segmenter& segmenter, const ExtractorConfig& config,
                           int threads);

}  // namespace pairmine
