#pragma once

#include <string>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

struct LoadResult {
  std::vector<Document> documents;
  int skipped_records = 0;
};

// Reads a manifest file (one record per line: corpus_id, genre, test_only,
// source_path). Unknown genre strings or malformed records are fatal.
// Relative source paths resolve against the manifest's directory.
std::vector<CorpusManifest> load_manifest(const std::string& path);

// Reads one corpus file (one record per line: doc_id, paragraphs[]).
// Malformed lines are counted and skipped. Text is NFC-normalized; empty
// paragraphs are dropped; a record left with no paragraphs is skipped.
// A missing file throws std::runtime_error.
LoadResult load_corpus(const CorpusManifest& manifest);

}  // namespace pairmine
