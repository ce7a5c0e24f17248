#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pairmine/types.hpp"
#include "pairmine/vocab.hpp"

namespace pairmine {

struct TrainConfig {
  int epochs = 40;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  int batch_size = 32;
  std::uint64_t seed = 0;
};

// Multinomial logistic regression over the two-block bag-of-words features.
// Class order is the fixed label order.
class LinearModel {
 public:
  LinearModel() = default;
  LinearModel(std::size_t features, bool premise_only);

  std::size_t features() const { return features_; }
  bool premise_only() const { return premise_only_; }

  std::array<double, 4> logits(const SparseVector& x) const;
  std::array<double, 4> probabilities(const SparseVector& x) const;
  Label predict(const SparseVector& x) const;  // argmax, lowest index on ties

  double& weight(std::size_t cls, std::size_t feature);
  double weight(std::size_t cls, std::size_t feature) const;
  double& bias(std::size_t cls) { return bias_[cls]; }
  double bias(std::size_t cls) const { return bias_[cls]; }

  // Model plus the vocabulary it was trained with.
  void save(const std::string& path, const Vocabulary& vocab,
            const TrainConfig& config) const;
  struct Loaded;
  static Loaded load(const std::string& path);

 private:
  std::size_t features_ = 0;
  bool premise_only_ = false;
  std::vector<double> weights_;  // row-major, 4 x features
  std::array<double, 4> bias_{};
};

struct LinearModel::Loaded {
  LinearModel model;
  Vocabulary vocab;
};

// Average cross-entropy plus (l2/2)*||W||^2 (biases unregularized).
double average_loss(const LinearModel& model, const std::vector<SparseVector>& xs,
                    const std::vector<Label>& ys, double l2);

struct TrainResult {
  LinearModel model;
  std::vector<double> epoch_losses;  // non-increasing within 1e-6
};

// Mini-batch gradient descent. After each epoch the full training loss is
// measured; an epoch that increased it is rolled back and retried at half
// the learning rate, which keeps the recorded loss sequence monotone.
// Throws when any class has no training examples.
TrainResult train(const std::vector<SparseVector>& xs, const std::vector<Label>& ys,
                  std::size_t features, bool premise_only, const TrainConfig& config);

// Maximum relative error between the analytic full-batch gradient and
// central finite differences, over every weight and bias.
double gradient_check(const std::vector<SparseVector>& xs,
                      const std::vector<Label>& ys, std::size_t features,
                      double l2, std::uint64_t seed);

}  // namespace pairmine
