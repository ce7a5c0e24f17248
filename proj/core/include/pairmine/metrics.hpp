#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

struct SubReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::int64_t count = 0;
};

struct EvalReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::array<double, 4> per_class_accuracy{};     // recall per class
  std::array<std::array<std::int64_t, 4>, 4> confusion{};  // [gold][pred]
  std::int64_t total = 0;
  std::map<Genre, SubReport> per_genre;
  std::map<std::string, SubReport> per_corpus;
};

// Accuracy, macro-F1 (0/0 -> 0 per class), per-class accuracy, confusion
// counts, and per-genre / per-corpus sub-reports.
EvalReport evaluate_predictions(const std::vector<LabeledPair>& pairs,
                                const std::vector<Label>& predictions);

// Metrics computed from a confusion matrix alone (doubles so that expected
// counts work too).
struct ConfusionMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::array<double, 4> per_class_f1{};
};
ConfusionMetrics metrics_from_confusion(
    const std::array<std::array<double, 4>, 4>& confusion);

// Chance-level majority baseline: the majority classes (all argmax-tied
// labels) are predicted uniformly at random, evaluated in expectation. On a
// balanced set every class ties, giving accuracy and macro-F1 of exactly
// 0.25 with expected confusion n_c/4.
struct MajorityBaseline {
  std::array<std::int64_t, 4> class_counts{};
  std::vector<Label> majority_classes;
  std::array<std::array<double, 4>, 4> expected_confusion{};
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};
MajorityBaseline majority_baseline(const std::vector<LabeledPair>& pairs);

}  // namespace pairmine
