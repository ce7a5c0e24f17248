#include "pairmine/metrics.hpp"

#include <stdexcept>

namespace pairmine {

ConfusionMetrics metrics_from_confusion(
    const std::array<std::array<double, 4>, 4>& confusion) {
  ConfusionMetrics m;
  double total = 0.0;
  double diagonal = 0.0;
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t p = 0; p < 4; ++p) {
      total += confusion[g][p];
      if (g == p) diagonal += confusion[g][p];
    }
  m.accuracy = total > 0.0 ? diagonal / total : 0.0;

  double f1_sum = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    const double tp = confusion[c][c];
    double fp = 0.0;
    double fn = 0.0;
    for (std::size_t o = 0; o < 4; ++o) {
      if (o == c) continue;
      fp += confusion[o][c];
      fn += confusion[c][o];
    }
    const double precision = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
    const double recall = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
    const double f1 =
        precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall)
                                 : 0.0;
    m.per_class_f1[c] = f1;
    f1_sum += f1;
  }
  m.macro_f1 = f1_sum / 4.0;
  return m;
}

namespace {

SubReport sub_report_from(const std::array<std::array<double, 4>, 4>& confusion,
                          std::int64_t count) {
  const auto m = metrics_from_confusion(confusion);
  return {m.accuracy, m.macro_f1, count};
}

}  // namespace

EvalReport evaluate_predictions(const std::vector<LabeledPair>& pairs,
                                const std::vector<Label>& predictions) {
  if (pairs.size() != predictions.size())
    throw std::invalid_argument("pairs and predictions differ in length");
  EvalReport report;
  report.total = static_cast<std::int64_t>(pairs.size());

  std::map<Genre, std::array<std::array<double, 4>, 4>> genre_confusion;
  std::map<std::string, std::array<std::array<double, 4>, 4>> corpus_confusion;
  std::map<Genre, std::int64_t> genre_counts;
  std::map<std::string, std::int64_t> corpus_counts;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto g = static_cast<std::size_t>(pairs[i].label);
    const auto p = static_cast<std::size_t>(predictions[i]);
    ++report.confusion[g][p];
    genre_confusion[pairs[i].genre][g][p] += 1.0;
    corpus_confusion[pairs[i].corpus_id][g][p] += 1.0;
    ++genre_counts[pairs[i].genre];
    ++corpus_counts[pairs[i].corpus_id];
  }

  std::array<std::array<double, 4>, 4> as_double{};
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t p = 0; p < 4; ++p)
      as_double[g][p] = static_cast<double>(report.confusion[g][p]);
  const auto m = metrics_from_confusion(as_double);
  report.accuracy = m.accuracy;
  report.macro_f1 = m.macro_f1;
  for (std::size_t c = 0; c < 4; ++c) {
    double row = 0.0;
    for (std::size_t p = 0; p < 4; ++p) row += as_double[c][p];
    report.per_class_accuracy[c] = row > 0.0 ? as_double[c][c] / row : 0.0;
  }
  for (const auto& [genre, conf] : genre_confusion)
    report.per_genre[genre] = sub_report_from(conf, genre_counts[genre]);
  for (const auto& [corpus, conf] : corpus_confusion)
    report.per_corpus[corpus] = sub_report_from(conf, corpus_counts[corpus]);
  return report;
}

MajorityBaseline majority_baseline(const std::vector<LabeledPair>& pairs) {
  MajorityBaseline b;
  for (const auto& p : pairs) ++b.class_counts[static_cast<std::size_t>(p.label)];
  std::int64_t max_count = 0;
  for (const auto c : b.class_counts) max_count = std::max(max_count, c);
  for (Label l : kAllLabels)
    if (b.class_counts[static_cast<std::size_t>(l)] == max_count && max_count > 0)
      b.majority_classes.push_back(l);
  if (b.majority_classes.empty()) return b;

  const double share = 1.0 / static_cast<double>(b.majority_classes.size());
  for (Label gold : kAllLabels) {
    const auto g = static_cast<std::size_t>(gold);
    for (Label pred : b.majority_classes)
      b.expected_confusion[g][static_cast<std::size_t>(pred)] =
          static_cast<double>(b.class_counts[g]) * share;
  }
  const auto m = metrics_from_confusion(b.expected_confusion);
  b.accuracy = m.accuracy;
  b.macro_f1 = m.macro_f1;
  return b;
}

}  // namespace pairmine
