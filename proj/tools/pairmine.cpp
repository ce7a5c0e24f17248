#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairmine/annotations.hpp"
#include "pairmine/corpus_io.hpp"
#include "pairmine/extractor.hpp"
#include "pairmine/lexicon.hpp"
#include "pairmine/linear_model.hpp"
#include "pairmine/metrics.hpp"
#include "pairmine/records_io.hpp"
#include "pairmine/run_report.hpp"
#include "pairmine/segmenter.hpp"
#include "pairmine/splitter.hpp"
#include "pairmine/stress.hpp"
#include "pairmine/tagger.hpp"
#include "pairmine/token_report.hpp"
#include "pairmine/types.hpp"
#include "pairmine/vocab.hpp"

namespace {

using namespace pairmine;
using ojson = nlohmann::ordered_json;

std::string env_or(const char* name, const std::string& current) {
  if (!current.empty()) return current;
  if (const char* v = std::getenv(name)) return v;
  return current;
}

ojson stats_to_json(const ExtractionStats& s) {
  ojson j;
  j["documents"] = s.documents;
  j["linked_candidates"] = s.linked_candidates;
  j["emitted_linked"] = s.emitted_linked;
  j["emitted_neutral"] = s.emitted_neutral;
  j["dropped_degenerate"] = s.dropped_degenerate;
  j["dropped_premise_incomplete"] = s.dropped_premise_incomplete;
  j["dropped_hypothesis_incomplete"] = s.dropped_hypothesis_incomplete;
  j["dropped_duplicate_text"] = s.dropped_duplicate_text;
  j["neutral_shortfall"] = s.neutral_shortfall;
  j["skipped_records"] = s.skipped_records;
  return j;
}

ojson report_to_json(const EvalReport& r) {
  ojson j;
  j["accuracy"] = r.accuracy;
  j["macro_f1"] = r.macro_f1;
  j["total"] = r.total;
  j["per_class_accuracy"] = ojson::object();
  for (Label l : kAllLabels)
    j["per_class_accuracy"][std::string(to_string(l))] =
        r.per_class_accuracy[static_cast<std::size_t>(l)];
  j["confusion"] = ojson::array();
  for (const auto& row : r.confusion) j["confusion"].push_back(row);
  j["per_genre"] = ojson::object();
  for (const auto& [genre, sub] : r.per_genre)
    j["per_genre"][std::string(to_string(genre))] = {{"accuracy", sub.accuracy},
                                                     {"macro_f1", sub.macro_f1},
                                                     {"count", sub.count}};
  j["per_corpus"] = ojson::object();
  for (const auto& [corpus, sub] : r.per_corpus)
    j["per_corpus"][corpus] = {{"accuracy", sub.accuracy},
                               {"macro_f1", sub.macro_f1},
                               {"count", sub.count}};
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
  std::string manifest;
  std::string out;
  std::string lexicon_path;
  std::string tags_path;
  std::string report_path;
  double neutral_ratio = 1.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

int run_extract(const ExtractArgs& args) {
  const auto manifests = load_manifest(args.manifest);
  if (manifests.empty()) throw std::runtime_error("manifest lists no corpora");

  const std::string lexicon_path = env_or("PAIRMINE_LEXICON", args.lexicon_path);
  const std::string tags_path = env_or("PAIRMINE_TAGS", args.tags_path);
  const LinkingLexicon lexicon = lexicon_path.empty()
                                     ? LinkingLexicon::builtin()
                                     : LinkingLexicon::from_file(lexicon_path);
  RuleTagger tagger;
  std::optional<ExternalTags> external;
  if (!tags_path.empty()) external = ExternalTags::from_file(tags_path);

  ExtractorConfig config;
  config.neutral_ratio = args.neutral_ratio;
  config.seed = args.seed;
  config.lexicon = &lexicon;
  config.tagger = &tagger;
  config.external_tags = external ? &*external : nullptr;

  std::vector<const CorpusManifest*> ordered;
  for (const auto& m : manifests) ordered.push_back(&m);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->corpus_id < b->corpus_id; });

  Segmenter segmenter;
  std::vector<LabeledPair> all_pairs;
  ExtractionStats totals;
  ojson per_corpus = ojson::object();
  for (const auto* m : ordered) {
    auto loaded = load_corpus(*m);
    auto result = extract_corpus(loaded.documents, segmenter, config, args.threads);
    result.stats.skipped_records = loaded.skipped_records;
    totals += result.stats;
    per_corpus[m->corpus_id] = stats_to_json(result.stats);
    for (auto& p : result.pairs) all_pairs.push_back(std::move(p));
  }
  write_pairs(args.out, all_pairs);

  RunReport report("extract");
  report.body()["config"] = {{"manifest", args.manifest},
                             {"out", args.out},
                             {"seed", args.seed},
                             {"neutral_ratio", args.neutral_ratio},
                             {"lexicon", lexicon_path.empty() ? "builtin" : lexicon_path},
                             {"tags", tags_path.empty() ? ojson(nullptr) : ojson(tags_path)}};
  report.body()["totals"] = stats_to_json(totals);
  report.body()["per_corpus"] = per_corpus;
  const std::string report_path =
      args.report_path.empty() ? args.out + ".report.json" : args.report_path;
  report.write(report_path);

  std::cout << "extracted " << all_pairs.size() << " pairs from " << totals.documents
            << " documents across " << manifests.size() << " corpora\n"
            << "report: " << report_path << "\n";
  return 0;
}

// ------------------------------------------------------------------ split

struct SplitArgs {
  std::string pairs;
  std::string manifest;
  std::string out_dir;
  std::string report_path;
  double test_frac = 0.1;
  double val_frac = 0.1;
  int cap = 15000;
  std::uint64_t seed = 0;
};

int run_split(const SplitArgs& args) {
  const auto pairs = read_pairs(args.pairs);
  const auto manifests = load_manifest(args.manifest);

  std::map<std::string, bool> corpus_test_only;
  std::vector<DocKey> docs;
  for (const auto& m : manifests) {
    corpus_test_only[m.corpus_id] = m.test_only;
    const auto loaded = load_corpus(m);
    for (const auto& d : loaded.documents)
      docs.push_back({m.corpus_id, d.doc_id, m.test_only});
  }
  for (const auto& p : pairs)
    if (!corpus_test_only.count(p.corpus_id))
      throw std::runtime_error("pair " + p.pair_id + " references corpus " +
                               p.corpus_id + " not in the manifest");

  SplitConfig config;
  config.test_fraction = args.test_frac;
  config.val_fraction_of_remainder = args.val_frac;
  config.val_cap_per_corpus = args.cap;
  config.test_cap_per_corpus = args.cap;
  config.seed = args.seed;

  SplitManifest manifest = assign_documents(docs, config);
  const BalanceResult balanced = balance_split(pairs, manifest, config);

  std::filesystem::create_directories(args.out_dir);
  const auto dir = std::filesystem::path(args.out_dir);
  write_pairs((dir / "train.jsonl").string(), balanced.train);
  write_pairs((dir / "val.jsonl").string(), balanced.val);
  write_pairs((dir / "test.jsonl").string(), balanced.test);
  write_split_manifest((dir / "split_manifest.json").string(), manifest, config,
                       balanced);

  RunReport report("split");
  report.body()["config"] = {{"pairs", args.pairs},
                             {"manifest", args.manifest},
                             {"out_dir", args.out_dir},
                             {"seed", args.seed},
                             {"test_fraction", args.test_frac},
                             {"val_fraction_of_remainder", args.val_frac},
                             {"cap_per_corpus", args.cap}};
  report.body()["counts"] = {{"input_pairs", pairs.size()},
                             {"train", balanced.train.size()},
                             {"val", balanced.val.size()},
                             {"test", balanced.test.size()}};
  report.body()["warnings"] = manifest.warnings;
  report.body()["dropped_cells"] = balanced.dropped_cells;
  const std::string report_path =
      args.report_path.empty() ? (dir / "split.report.json").string()
                               : args.report_path;
  report.write(report_path);

  std::cout << "split " << pairs.size() << " pairs into train=" << balanced.train.size()
            << " val=" << balanced.val.size() << " test=" << balanced.test.size()
            << "\nmanifest: " << (dir / "split_manifest.json").string() << "\n";
  for (const auto& w : manifest.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

// ----------------------------------------------------------------- stress

struct StressArgs {
  std::string test;
  std::string out_dir;
  std::string report_path;
  std::uint64_t seed = 0;
};

int run_stress(const StressArgs& args) {
  const auto pairs = read_pairs(args.test);
  std::filesystem::create_directories(args.out_dir);
  const auto dir = std::filesystem::path(args.out_dir);

  ojson counts = ojson::object();
  for (StressKind kind : kAllStressKinds) {
    const auto stressed = apply_stress_all(pairs, kind, args.seed);
    const auto path = dir / ("test_" + std::string(to_string(kind)) + ".jsonl");
    write_pairs(path.string(), stressed);
    std::int64_t unmodified = 0;
    for (const auto& p : stressed)
      if (p.stress_unmodified && *p.stress_unmodified) ++unmodified;
    counts[std::string(to_string(kind))] = {{"records", stressed.size()},
                                            {"unmodified", unmodified}};
  }

  RunReport report("stress");
  report.body()["config"] = {{"test", args.test},
                             {"out_dir", args.out_dir},
                             {"seed", args.seed}};
  report.body()["outputs"] = counts;
  const std::string report_path =
      args.report_path.empty() ? (dir / "stress.report.json").string()
                               : args.report_path;
  report.write(report_path);

  std::cout << "wrote 4 stress variants of " << pairs.size() << " pairs to "
            << args.out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------- train-baseline

struct TrainArgs {
  std::string train;
  std::string out;
  std::string report_path;
  bool premise_only = false;
  int epochs = 40;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  int batch_size = 32;
  int min_count = 1;
  int max_vocab = 50000;
  std::uint64_t seed = 0;
};

int run_train(const TrainArgs& args) {
  const auto pairs = read_pairs(args.train);
  if (pairs.empty()) throw std::runtime_error("training file has no pairs");

  VocabConfig vc;
  vc.min_count = args.min_count;
  vc.max_size = args.max_vocab;
  const Vocabulary vocab = Vocabulary::build(pairs, vc);

  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  xs.reserve(pairs.size());
  for (const auto& p : pairs) {
    xs.push_back(featurize(p, vocab, args.premise_only));
    ys.push_back(p.label);
  }

  TrainConfig tc;
  tc.epochs = args.epochs;
  tc.learning_rate = args.learning_rate;
  tc.l2 = args.l2;
  tc.batch_size = args.batch_size;
  tc.seed = args.seed;
  const TrainResult result = train(xs, ys, 2 * vocab.size(), args.premise_only, tc);
  result.model.save(args.out, vocab, tc);

  RunReport report("train-baseline");
  report.body()["config"] = {{"train", args.train},
                             {"out", args.out},
                             {"seed", args.seed},
                             {"premise_only", args.premise_only},
                             {"epochs", args.epochs},
                             {"learning_rate", args.learning_rate},
                             {"l2", args.l2},
                             {"batch_size", args.batch_size},
                             {"min_count", args.min_count},
                             {"max_vocab", args.max_vocab}};
  std::array<std::int64_t, 4> class_counts{};
  for (Label y : ys) ++class_counts[static_cast<std::size_t>(y)];
  ojson cc = ojson::object();
  for (Label l : kAllLabels)
    cc[std::string(to_string(l))] = class_counts[static_cast<std::size_t>(l)];
  report.body()["counts"] = {{"examples", pairs.size()},
                             {"vocabulary", vocab.size()},
                             {"features", 2 * vocab.size()}};
  report.body()["class_counts"] = cc;
  report.body()["epoch_losses"] = result.epoch_losses;
  const std::string report_path =
      args.report_path.empty() ? args.out + ".report.json" : args.report_path;
  report.write(report_path);

  std::cout << "trained lexical baseline on " << pairs.size() << " pairs, vocab "
            << vocab.size() << ", final loss "
            << (result.epoch_losses.empty() ? 0.0 : result.epoch_losses.back())
            << "\nmodel: " << args.out << "\n";
  return 0;
}

// --------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string model;
  std::string pairs;
  std::string manifest;
  std::string out;
  bool by_genre = false;
  bool by_corpus = false;
  bool confusion = false;
};

int run_evaluate(const EvaluateArgs& args) {
  const auto loaded = LinearModel::load(args.model);
  const auto pairs = read_pairs(args.pairs);
  if (pairs.empty()) throw std::runtime_error("pairs file has no records");

  std::vector<Label> predictions;
  predictions.reserve(pairs.size());
  for (const auto& p : pairs)
    predictions.push_back(
        loaded.model.predict(featurize(p, loaded.vocab, loaded.model.premise_only())));

  const EvalReport report = evaluate_predictions(pairs, predictions);
  const MajorityBaseline majority = majority_baseline(pairs);

  std::set<std::string> test_only_corpora;
  if (!args.manifest.empty())
    for (const auto& m : load_manifest(args.manifest))
      if (m.test_only) test_only_corpora.insert(m.corpus_id);

  ojson out;
  out["tool"] = std::string(kToolName);
  out["version"] = std::string(kToolVersion);
  out["subcommand"] = "evaluate";
  out["config"] = {{"model", args.model},
                   {"pairs", args.pairs},
                   {"premise_only", loaded.model.premise_only()}};
  out["metrics"] = report_to_json(report);
  out["majority_baseline"] = {{"accuracy", majority.accuracy},
                              {"macro_f1", majority.macro_f1}};
  if (!test_only_corpora.empty()) {
    std::vector<LabeledPair> ood_pairs;
    std::vector<Label> ood_preds;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (test_only_corpora.count(pairs[i].corpus_id)) {
        ood_pairs.push_back(pairs[i]);
        ood_preds.push_back(predictions[i]);
      }
    if (!ood_pairs.empty()) {
      const auto ood = evaluate_predictions(ood_pairs, ood_preds);
      out["out_of_domain"] = report_to_json(ood);
      ojson corpora = ojson::array();
      for (const auto& c : test_only_corpora) corpora.push_back(c);
      out["out_of_domain"]["corpora"] = corpora;
    }
  }

  const std::string out_path = args.out.empty() ? args.pairs + ".eval.json" : args.out;
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write evaluation report: " + out_path);
  f << out.dump(2) << "\n";

  std::cout << "pairs evaluated     " << report.total << "\n"
            << "accuracy            " << fmt(report.accuracy) << "\n"
            << "macro_f1            " << fmt(report.macro_f1) << "\n"
            << "majority accuracy   " << fmt(majority.accuracy) << "\n"
            << "majority macro_f1   " << fmt(majority.macro_f1) << "\n";
  std::cout << "per-class accuracy\n";
  for (Label l : kAllLabels)
    std::cout << "  " << std::left << std::setw(12) << to_string(l) << " "
              << fmt(report.per_class_accuracy[static_cast<std::size_t>(l)]) << "\n";
  if (args.confusion) {
    std::cout << "confusion (rows gold, cols predicted)\n";
    for (std::size_t g = 0; g < 4; ++g) {
      std::cout << "  " << std::left << std::setw(12) << to_string(kAllLabels[g]);
      for (std::size_t p = 0; p < 4; ++p)
        std::cout << std::right << std::setw(8) << report.confusion[g][p];
      std::cout << "\n";
    }
  }
  if (args.by_genre) {
    std::cout << "per-genre\n";
    for (const auto& [genre, sub] : report.per_genre)
      std::cout << "  " << std::left << std::setw(12) << to_string(genre) << " acc "
                << fmt(sub.accuracy) << "  f1 " << fmt(sub.macro_f1) << "  n "
                << sub.count << "\n";
  }
  if (args.by_corpus) {
    std::cout << "per-corpus\n";
    for (const auto& [corpus, sub] : report.per_corpus)
      std::cout << "  " << std::left << std::setw(24) << corpus << " acc "
                << fmt(sub.accuracy) << "  f1 " << fmt(sub.macro_f1) << "  n "
                << sub.count << "\n";
  }
  if (out.contains("out_of_domain"))
    std::cout << "out-of-domain accuracy " << fmt(out["out_of_domain"]["accuracy"].get<double>())
              << " over " << out["out_of_domain"]["total"].get<std::int64_t>()
              << " pairs\n";
  std::cout << "report: " << out_path << "\n";
  return 0;
}

// --------------------------------------------------------------- validate

struct ValidateArgs {
  std::string pairs;
  std::string annotations;
  std::string out;
  std::string report_path;
};

int run_validate(const ValidateArgs& args) {
  const auto pairs = read_pairs(args.pairs);
  const auto annotations = load_annotations(args.annotations);
  const FilterResult result = majority_filter(pairs, annotations.records);

  if (!args.out.empty()) write_pairs(args.out, result.kept);

  RunReport report("validate");
  report.body()["config"] = {{"pairs", args.pairs},
                             {"annotations", args.annotations},
                             {"out", args.out.empty() ? ojson(nullptr) : ojson(args.out)}};
  ojson per_class = ojson::object();
  for (Label l : kAllLabels) {
    const auto idx = static_cast<std::size_t>(l);
    per_class[std::string(to_string(l))] = {{"annotated", result.seen_per_class[idx]},
                                            {"kept", result.kept_per_class[idx]}};
  }
  ojson per_genre = ojson::object();
  for (const auto& [genre, count] : result.kept_per_genre)
    per_genre[std::string(to_string(genre))] = count;
  report.body()["counts"] = {
      {"input_pairs", pairs.size()},
      {"kept", result.kept.size()},
      {"dropped_no_annotations", result.dropped_no_annotations},
      {"dropped_no_majority", result.dropped_no_majority},
      {"dropped_majority_differs", result.dropped_majority_differs},
      {"unknown_pair_annotations", result.unknown_pair_warnings},
      {"duplicate_votes", annotations.duplicate_votes}};
  report.body()["kept_per_class"] = per_class;
  report.body()["kept_per_genre"] = per_genre;
  const std::string report_path = args.report_path.empty()
                                      ? args.pairs + ".validate.report.json"
                                      : args.report_path;
  report.write(report_path);

  std::cout << "kept " << result.kept.size() << " of " << pairs.size() << " pairs\n"
            << "  dropped (no annotations)    " << result.dropped_no_annotations << "\n"
            << "  dropped (tie vote)          " << result.dropped_no_majority << "\n"
            << "  dropped (majority differs)  " << result.dropped_majority_differs
            << "\n";
  if (result.unknown_pair_warnings > 0)
    std::cout << "warning: " << result.unknown_pair_warnings
              << " annotation(s) referenced unknown pair_ids\n";
  std::cout << "retention per class\n";
  for (Label l : kAllLabels) {
    const auto idx = static_cast<std::size_t>(l);
    std::cout << "  " << std::left << std::setw(12) << to_string(l) << " "
              << result.kept_per_class[idx] << " / " << result.seen_per_class[idx]
              << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ stats

struct StatsArgs {
  std::string pairs;
  std::string train;
  std::string val;
  std::string test;
  std::string out;
  std::string stopwords_path;
  int top_tokens = 0;
};

int run_stats(const StatsArgs& args) {
  std::vector<std::pair<std::string, std::vector<LabeledPair>>> splits;
  if (!args.pairs.empty()) splits.emplace_back("all", read_pairs(args.pairs));
  if (!args.train.empty()) splits.emplace_back("train", read_pairs(args.train));
  if (!args.val.empty()) splits.emplace_back("val", read_pairs(args.val));
  if (!args.test.empty()) splits.emplace_back("test", read_pairs(args.test));
  if (splits.empty())
    throw CLI::ValidationError("stats", "pass --pairs or any of --train/--val/--test");

  // corpus -> split -> per-class counts
  std::map<std::string, std::map<std::string, std::array<std::int64_t, 4>>> table;
  std::map<std::pair<std::string, Genre>, std::int64_t> genre_counts;
  for (const auto& [split, pairs] : splits)
    for (const auto& p : pairs) {
      ++table[p.corpus_id][split][static_cast<std::size_t>(p.label)];
      ++genre_counts[{split, p.genre}];
    }

  std::cout << std::left << std::setw(26) << "corpus" << std::setw(7) << "split";
  for (Label l : kAllLabels) std::cout << std::right << std::setw(13) << to_string(l);
  std::cout << std::right << std::setw(10) << "total" << "\n";
  ojson rows = ojson::array();
  for (const auto& [corpus, by_split] : table)
    for (const auto& [split, counts] : by_split) {
      std::int64_t total = 0;
      for (const auto c : counts) total += c;
      std::cout << std::left << std::setw(26) << corpus << std::setw(7) << split;
      for (const auto c : counts) std::cout << std::right << std::setw(13) << c;
      std::cout << std::right << std::setw(10) << total << "\n";
      ojson row;
      row["corpus_id"] = corpus;
      row["split"] = split;
      for (Label l : kAllLabels)
        row[std::string(to_string(l))] = counts[static_cast<std::size_t>(l)];
      row["total"] = total;
      rows.push_back(std::move(row));
    }

  std::cout << "\ngenre totals\n";
  ojson genres = ojson::array();
  for (const auto& [key, count] : genre_counts) {
    std::cout << "  " << std::left << std::setw(10) << to_string(key.second)
              << std::setw(7) << key.first << std::right << std::setw(10) << count
              << "\n";
    ojson row;
    row["genre"] = std::string(to_string(key.second));
    row["split"] = key.first;
    row["count"] = count;
    genres.push_back(std::move(row));
  }

  ojson token_json = ojson::object();
  if (args.top_tokens > 0) {
    const std::string stop_path = env_or("PAIRMINE_STOPWORDS", args.stopwords_path);
    const auto stopwords =
        stop_path.empty() ? default_stopwords() : stopwords_from_file(stop_path);
    std::vector<LabeledPair> all;
    for (const auto& [split, pairs] : splits)
      all.insert(all.end(), pairs.begin(), pairs.end());
    const auto clouds = class_token_report(
        all, static_cast<std::size_t>(args.top_tokens), stopwords);
    std::cout << "\ntop tokens per class\n";
    for (Label l : kAllLabels) {
      std::cout << "  " << to_string(l) << ":";
      ojson list = ojson::array();
      for (const auto& tc : clouds[static_cast<std::size_t>(l)]) {
        std::cout << " " << tc.token << "(" << tc.count << ")";
        list.push_back({{"token", tc.token}, {"count", tc.count}});
      }
      std::cout << "\n";
      token_json[std::string(to_string(l))] = std::move(list);
    }
  }

  if (!args.out.empty()) {
    ojson j;
    j["tool"] = std::string(kToolName);
    j["version"] = std::string(kToolVersion);
    j["subcommand"] = "stats";
    j["rows"] = rows;
    j["genres"] = genres;
    if (args.top_tokens > 0) j["top_tokens"] = token_json;
    std::ofstream f(args.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write stats file: " + args.out);
    f << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus-to-dataset toolkit for four-class Spanish NLI pairs"};
  app.require_subcommand(1);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand(
      "extract", "mine labeled premise-hypothesis pairs from corpora");
  extract->add_option("--manifest", extract_args.manifest, "corpora manifest file")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--out", extract_args.out, "output pairs file")->required();
  extract->add_option("--seed", extract_args.seed, "global seed")->required();
  extract->add_option("--neutral-ratio", extract_args.neutral_ratio,
                      "neutral pairs per linked pair per document")
      ->check(CLI::PositiveNumber);
  extract->add_option("--lexicon", extract_args.lexicon_path,
                      "linking-phrase lexicon override file");
  extract->add_option("--tags", extract_args.tags_path,
                      "pre-tagged sentences file (external tagger output)");
  extract->add_option("--threads", extract_args.threads, "worker thread count")
      ->check(CLI::Range(1, 256));
  extract->add_option("--report", extract_args.report_path, "run report path");

  SplitArgs split_args;
  auto* split = app.add_subcommand(
      "split", "assign documents to train/val/test and balance classes");
  split->add_option("--pairs", split_args.pairs, "extracted pairs file")
      ->required()
      ->check(CLI::ExistingFile);
  split->add_option("--manifest", split_args.manifest, "corpora manifest file")
      ->required()
      ->check(CLI::ExistingFile);
  split->add_option("--out-dir", split_args.out_dir, "output directory")->required();
  split->add_option("--seed", split_args.seed, "global seed")->required();
  split->add_option("--test-frac", split_args.test_frac, "test fraction of documents");
  split->add_option("--val-frac", split_args.val_frac,
                    "val fraction of non-test documents");
  split->add_option("--cap", split_args.cap, "per-corpus val/test example cap");
  split->add_option("--report", split_args.report_path, "run report path");

  StressArgs stress_args;
  auto* stress = app.add_subcommand("stress",
                                    "generate the four stress-test variants");
  stress->add_option("--test", stress_args.test, "test split pairs file")
      ->required()
      ->check(CLI::ExistingFile);
  stress->add_option("--out-dir", stress_args.out_dir, "output directory")->required();
  stress->add_option("--seed", stress_args.seed, "global seed")->required();
  stress->add_option("--report", stress_args.report_path, "run report path");

  TrainArgs train_args;
  auto* train = app.add_subcommand("train-baseline",
                                   "train the bag-of-words lexical baseline");
  train->add_option("--train", train_args.train, "training pairs file")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--out", train_args.out, "output model file")->required();
  train->add_option("--seed", train_args.seed, "global seed")->required();
  train->add_flag("--premise-only", train_args.premise_only,
                  "ablate hypothesis features (artifact detection)");
  train->add_option("--epochs", train_args.epochs)->check(CLI::Range(1, 10000));
  train->add_option("--learning-rate", train_args.learning_rate)
      ->check(CLI::PositiveNumber);
  train->add_option("--l2", train_args.l2)->check(CLI::NonNegativeNumber);
  train->add_option("--batch-size", train_args.batch_size)->check(CLI::Range(1, 65536));
  train->add_option("--min-count", train_args.min_count, "vocabulary count threshold")
      ->check(CLI::Range(1, 1000000));
  train->add_option("--max-vocab", train_args.max_vocab, "vocabulary size limit")
      ->check(CLI::Range(1, 100000000));
  train->add_option("--report", train_args.report_path, "run report path");

  EvaluateArgs eval_args;
  auto* evaluate = app.add_subcommand("evaluate",
                                      "score a model on a pairs file");
  evaluate->add_option("--model", eval_args.model, "model file")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--pairs", eval_args.pairs, "pairs file to evaluate")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--manifest", eval_args.manifest,
                       "corpora manifest (marks test-only corpora out-of-domain)")
      ->check(CLI::ExistingFile);
  evaluate->add_option("--out", eval_args.out, "machine-readable report path");
  evaluate->add_flag("--by-genre", eval_args.by_genre, "print per-genre metrics");
  evaluate->add_flag("--by-corpus", eval_args.by_corpus, "print per-corpus metrics");
  evaluate->add_flag("--confusion", eval_args.confusion, "print the confusion matrix");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "filter pairs by human annotation majority vote");
  validate->add_option("--pairs", validate_args.pairs, "pairs file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--annotations", validate_args.annotations,
                       "annotation records file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--out", validate_args.out, "filtered pairs output path");
  validate->add_option("--report", validate_args.report_path, "run report path");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "summarize pairs files");
  stats->add_option("--pairs", stats_args.pairs, "unsplit pairs file")
      ->check(CLI::ExistingFile);
  stats->add_option("--train", stats_args.train, "train split file")
      ->check(CLI::ExistingFile);
  stats->add_option("--val", stats_args.val, "val split file")
      ->check(CLI::ExistingFile);
  stats->add_option("--test", stats_args.test, "test split file")
      ->check(CLI::ExistingFile);
  stats->add_option("--out", stats_args.out, "machine-readable summary path");
  stats->add_option("--top-tokens", stats_args.top_tokens,
                    "per-class token report size")
      ->check(CLI::Range(0, 100000));
  stats->add_option("--stopwords", stats_args.stopwords_path,
                    "stopword list override (one token per line)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (extract->parsed()) return run_extract(extract_args);
    if (split->parsed()) return run_split(split_args);
    if (stress->parsed()) return run_stress(stress_args);
    if (train->parsed()) return run_train(train_args);
    if (evaluate->parsed()) return run_evaluate(eval_args);
    if (validate->parsed()) return run_validate(validate_args);
    if (stats->parsed()) return run_stats(stats_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
