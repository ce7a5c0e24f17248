#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

struct AnnotationRecord {
  std::string pair_id;
  std::string annotator_id;
  Label label = Label::neutral;
};

struct AnnotationLoad {
  std::vector<AnnotationRecord> records;
  int duplicate_votes = 0;  // repeated (pair_id, annotator_id); first kept
};

// One record per line with pair_id, annotator_id, label. Malformed records
// are fatal; a repeated (pair_id, annotator_id) keeps the first vote.
AnnotationLoad load_annotations(const std::string& path);

struct FilterResult {
  std::vector<LabeledPair> kept;
  std::int64_t dropped_no_annotations = 0;
  std::int64_t dropped_no_majority = 0;   // ties included
  std::int64_t dropped_majority_differs = 0;
  int unknown_pair_warnings = 0;
  std::array<std::int64_t, 4> kept_per_class{};
  std::array<std::int64_t, 4> seen_per_class{};  // annotated pairs per class
  std::map<Genre, std::int64_t> kept_per_genre;
};

// Keeps a pair iff its label has strictly more votes than every other label.
// Unannotated pairs are dropped; annotations naming unknown pairs are
// ignored with a warning count.
FilterResult majority_filter(const std::vector<LabeledPair>& pairs,
                             const std::vector<AnnotationRecord>& annotations);

}  // namespace pairmine
