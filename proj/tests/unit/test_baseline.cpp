#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "pairmine/linear_model.hpp"
#include "pairmine/rng.hpp"
#include "pairmine/vocab.hpp"
#include "temp_dir.hpp"

using namespace pairmine;

namespace {

LabeledPair text_pair(std::string premise, std::string hypothesis) {
  LabeledPair p;
  p.premise = std::move(premise);
  p.hypothesis = std::move(hypothesis);
  return p;
}

}  // namespace

TEST_CASE("feature tokens lowercase and strip punctuation") {
  CHECK(feature_tokens("El coche, rojo; frenó 3 veces.") ==
        std::vector<std::string>{"el", "coche", "rojo", "frenó", "3", "veces"});
  CHECK(feature_tokens("¡Años ÚTILES! 12,5") ==
        std::vector<std::string>{"años", "útiles", "12", "5"});
  CHECK(feature_tokens("").empty());
  CHECK(feature_tokens("...").empty());
}

TEST_CASE("vocabulary ranks by frequency with lexicographic ties") {
  const std::vector<LabeledPair> pairs = {text_pair("b b a", "c"),
                                          text_pair("a", "c b")};
  const auto vocab = Vocabulary::build(pairs, VocabConfig{});
  CHECK(vocab.tokens() == std::vector<std::string>{"b", "a", "c"});
  CHECK(vocab.index_of("b") == 0);
  CHECK(vocab.index_of("a") == 1);
  CHECK(vocab.index_of("c") == 2);
  CHECK(vocab.index_of("zz") == -1);
}

TEST_CASE("vocabulary honors min count and max size") {
  const std::vector<LabeledPair> pairs = {text_pair("uno uno uno dos dos", "tres")};
  VocabConfig config;
  config.min_count = 2;
  auto vocab = Vocabulary::build(pairs, config);
  CHECK(vocab.tokens() == std::vector<std::string>{"uno", "dos"});

  config = {};
  config.max_size = 1;
  vocab = Vocabulary::build(pairs, config);
  CHECK(vocab.tokens() == std::vector<std::string>{"uno"});
}

TEST_CASE("features live in premise and hypothesis blocks") {
  const auto vocab = Vocabulary::from_tokens({"a", "b", "c"});
  const auto pair = text_pair("a a b z", "c a");

  const auto full = featurize(pair, vocab, false);
  CHECK(full == SparseVector{{0, 2.0f}, {1, 1.0f}, {3, 1.0f}, {5, 1.0f}});
  for (std::size_t i = 1; i < full.size(); ++i)
    CHECK(full[i - 1].first < full[i].first);

  const auto premise_only = featurize(pair, vocab, true);
  CHECK(premise_only == SparseVector{{0, 2.0f}, {1, 1.0f}});
}

TEST_CASE("a zero model is uniform and ties go to the first class") {
  LinearModel model(3, false);
  const SparseVector x = {{0, 1.0f}};
  for (double p : model.probabilities(x)) CHECK(p == doctest::Approx(0.25));
  CHECK(model.predict(x) == Label::contrasting);

  model.weight(1, 0) = 1.0;
  model.weight(2, 0) = 1.0;
  CHECK(model.predict(x) == Label::entailment);
}

TEST_CASE("average loss of the zero model is log of the class count") {
  const std::vector<SparseVector> xs = {{{0, 1.0f}}, {{1, 2.0f}}};
  const std::vector<Label> ys = {Label::neutral, Label::reasoning};
  LinearModel model(2, false);
  CHECK(average_loss(model, xs, ys, 0.0) == doctest::Approx(std::log(4.0)));

  // the penalty term is l2/2 times the squared weights, biases exempt
  model.weight(0, 0) = 2.0;
  model.bias(1) = 5.0;
  const std::vector<SparseVector> empty_x = {{}};
  const std::vector<Label> one_y = {Label::entailment};
  LinearModel penalized(1, false);
  penalized.weight(0, 0) = 2.0;
  CHECK(average_loss(penalized, empty_x, one_y, 0.1) ==
        doctest::Approx(std::log(4.0) + 0.5 * 0.1 * 4.0));
}

TEST_CASE("training separates one-hot classes completely") {
  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  for (int rep = 0; rep < 8; ++rep)
    for (std::size_t c = 0; c < 4; ++c) {
      xs.push_back({{c, 1.0f}});
      ys.push_back(kAllLabels[c]);
    }
  TrainConfig config;
  config.epochs = 60;
  config.l2 = 1e-4;
  config.batch_size = 4;
  config.seed = 3;
  const auto result = train(xs, ys, 4, false, config);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(result.model.predict(xs[i]) == ys[i]);
  CHECK(result.epoch_losses.size() == 60);
  CHECK(result.epoch_losses.back() < 0.2);
}

TEST_CASE("epoch losses never increase") {
  std::mt19937_64 g(42);
  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  for (int i = 0; i < 120; ++i) {
    SparseVector x;
    for (std::size_t f = 0; f < 10; ++f)
      if (rng::bounded(g, 3) == 0)
        x.push_back({f, static_cast<float>(1 + rng::bounded(g, 3))});
    xs.push_back(std::move(x));
    ys.push_back(kAllLabels[static_cast<std::size_t>(rng::bounded(g, 4))]);
  }
  TrainConfig config;
  config.epochs = 25;
  config.learning_rate = 0.8;
  config.seed = 17;
  const auto result = train(xs, ys, 10, false, config);
  REQUIRE(result.epoch_losses.size() == 25);
  CHECK(result.epoch_losses.front() <= std::log(4.0) + 1e-9);
  for (std::size_t i = 1; i < result.epoch_losses.size(); ++i)
    CHECK(result.epoch_losses[i] <= result.epoch_losses[i - 1] + 1e-6);
}

TEST_CASE("identical inputs converge to the class frequencies") {
  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  const int counts[4] = {6, 2, 1, 1};
  for (std::size_t c = 0; c < 4; ++c)
    for (int i = 0; i < counts[c]; ++i) {
      xs.push_back({{0, 1.0f}});
      ys.push_back(kAllLabels[c]);
    }
  TrainConfig config;
  config.epochs = 200;
  config.learning_rate = 0.5;
  config.l2 = 0.0;
  config.batch_size = 10;
  config.seed = 1;
  const auto result = train(xs, ys, 1, false, config);
  const auto p = result.model.probabilities(xs[0]);
  CHECK(p[0] == doctest::Approx(0.6).epsilon(0.05));
  CHECK(p[1] == doctest::Approx(0.2).epsilon(0.15));
  CHECK(p[2] == doctest::Approx(0.1).epsilon(0.3));
  CHECK(p[3] == doctest::Approx(0.1).epsilon(0.3));
}

TEST_CASE("training requires every class") {
  std::vector<SparseVector> xs = {{{0, 1.0f}}, {{1, 1.0f}}};
  std::vector<Label> ys = {Label::contrasting, Label::entailment};
  CHECK_THROWS(train(xs, ys, 2, false, TrainConfig{}));
  CHECK_THROWS(train({}, {}, 2, false, TrainConfig{}));
  xs.push_back({{0, 2.0f}});
  CHECK_THROWS(train(xs, ys, 2, false, TrainConfig{}));  // misaligned
}

TEST_CASE("analytic gradients match finite differences") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 g(seed * 131 + 7);
    std::vector<SparseVector> xs;
    std::vector<Label> ys;
    const std::size_t n = 12 + rng::bounded(g, 20);
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector x;
      for (std::size_t f = 0; f < 7; ++f)
        if (rng::bounded(g, 2) == 0)
          x.push_back({f, static_cast<float>(1 + rng::bounded(g, 3))});
      xs.push_back(std::move(x));
      ys.push_back(kAllLabels[static_cast<std::size_t>(rng::bounded(g, 4))]);
    }
    const double l2 = seed % 3 == 0 ? 0.0 : seed % 3 == 1 ? 0.01 : 0.5;
    CHECK(gradient_check(xs, ys, 7, l2, seed) < 1e-4);
  }
}

TEST_CASE("saved models load back verbatim") {
  const auto vocab = Vocabulary::from_tokens({"sol", "mar", "red"});
  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  std::mt19937_64 g(5);
  for (int i = 0; i < 40; ++i) {
    SparseVector x;
    for (std::size_t f = 0; f < 2 * vocab.size(); ++f)
      if (rng::bounded(g, 3) == 0) x.push_back({f, 1.0f});
    xs.push_back(std::move(x));
    ys.push_back(kAllLabels[static_cast<std::size_t>(rng::bounded(g, 4))]);
  }
  TrainConfig config;
  config.epochs = 10;
  config.seed = 9;
  const auto result = train(xs, ys, 2 * vocab.size(), false, config);

  TempDir dir;
  const auto path = dir.file("model.json", "");
  result.model.save(path, vocab, config);
  const auto loaded = LinearModel::load(path);

  CHECK(loaded.model.features() == result.model.features());
  CHECK(loaded.model.premise_only() == result.model.premise_only());
  CHECK(loaded.vocab.tokens() == vocab.tokens());
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(loaded.model.bias(c) == result.model.bias(c));
    for (std::size_t f = 0; f < loaded.model.features(); ++f)
      CHECK(loaded.model.weight(c, f) == result.model.weight(c, f));
  }
  for (const auto& x : xs) CHECK(loaded.model.predict(x) == result.model.predict(x));

  CHECK_THROWS(LinearModel::load((dir.path / "missing.json").string()));
  CHECK_THROWS(LinearModel::load(dir.file("empty.json", "{}")));
  CHECK_THROWS(LinearModel::load(dir.file("trunc.json", "{\"vocab\": [")));
}
