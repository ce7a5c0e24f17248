#include "pairmine/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "pairmine/rng.hpp"

namespace pairmine {

using nlohmann::json;

LinearModel::LinearModel(std::size_t features, bool premise_only)
    : features_(features),
      premise_only_(premise_only),
      weights_(4 * features, 0.0) {}

double& LinearModel::weight(std::size_t cls, std::size_t feature) {
  return weights_[cls * features_ + feature];
}

double LinearModel::weight(std::size_t cls, std::size_t feature) const {
  return weights_[cls * features_ + feature];
}

std::array<double, 4> LinearModel::logits(const SparseVector& x) const {
  std::array<double, 4> z = bias_;
  for (std::size_t c = 0; c < 4; ++c) {
    const double* row = weights_.data() + c * features_;
    double acc = 0.0;
    for (const auto& [idx, val] : x) acc += row[idx] * static_cast<double>(val);
    z[c] += acc;
  }
  return z;
}

namespace {

std::array<double, 4> softmax(std::array<double, 4> z) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return z;
}

}  // namespace

std::array<double, 4> LinearModel::probabilities(const SparseVector& x) const {
  return softmax(logits(x));
}

Label LinearModel::predict(const SparseVector& x) const {
  const auto z = logits(x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < 4; ++c)
    if (z[c] > z[best]) best = c;
  return kAllLabels[best];
}

double average_loss(const LinearModel& model, const std::vector<SparseVector>& xs,
                    const std::vector<Label>& ys, double l2) {
  double total = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto p = model.probabilities(xs[i]);
    const double py = p[static_cast<std::size_t>(ys[i])];
    total += -std::log(std::max(py, 1e-300));
  }
  double reg = 0.0;
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t f = 0; f < model.features(); ++f)
      reg += model.weight(c, f) * model.weight(c, f);
  return total / static_cast<double>(xs.size()) + 0.5 * l2 * reg;
}

namespace {

// Adds the batch's average gradient scaled by -lr into the model.
void apply_batch(LinearModel& model, const std::vector<SparseVector>& xs,
                 const std::vector<Label>& ys, const std::vector<std::size_t>& batch,
                 double lr, double l2) {
  const double inv = 1.0 / static_cast<double>(batch.size());
  std::array<double, 4> bias_grad{};
  // Sparse weight gradient: accumulate per-example (p_c - y_c) * x.
  std::vector<std::array<double, 4>> coeffs(batch.size());
  for (std::size_t bi = 0; bi < batch.size(); ++bi) {
    const std::size_t i = batch[bi];
    auto p = model.probabilities(xs[i]);
    p[static_cast<std::size_t>(ys[i])] -= 1.0;
    coeffs[bi] = p;
    for (std::size_t c = 0; c < 4; ++c) bias_grad[c] += p[c];
  }
  // L2 term applies to every weight; fold its decay in first.
  if (l2 > 0.0) {
    const double decay = 1.0 - lr * l2;
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t f = 0; f < model.features(); ++f)
        model.weight(c, f) *= decay;
  }
  for (std::size_t bi = 0; bi < batch.size(); ++bi) {
    const std::size_t i = batch[bi];
    for (const auto& [idx, val] : xs[i])
      for (std::size_t c = 0; c < 4; ++c)
        model.weight(c, idx) -=
            lr * inv * coeffs[bi][c] * static_cast<double>(val);
  }
  for (std::size_t c = 0; c < 4; ++c) model.bias(c) -= lr * inv * bias_grad[c];
}

}  // namespace

TrainResult train(const std::vector<SparseVector>& xs, const std::vector<Label>& ys,
                  std::size_t features, bool premise_only,
                  const TrainConfig& config) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::invalid_argument("training set empty or misaligned");
  std::array<std::int64_t, 4> class_counts{};
  for (Label y : ys) ++class_counts[static_cast<std::size_t>(y)];
  for (Label l : kAllLabels)
    if (class_counts[static_cast<std::size_t>(l)] == 0)
      throw std::runtime_error("class " + std::string(to_string(l)) +
                               " has no training examples");

  TrainResult result;
  result.model = LinearModel(features, premise_only);
  double lr = config.learning_rate;
  double prev_loss = average_loss(result.model, xs, ys, config.l2);

  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 g(rng::hash64(config.seed, {"trainer"}));
  const auto batch_size = static_cast<std::size_t>(std::max(config.batch_size, 1));

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng::shuffle(order, g);
    const LinearModel snapshot = result.model;
    double accepted = prev_loss;
    double epoch_lr = lr;
    while (true) {
      for (std::size_t start = 0; start < order.size(); start += batch_size) {
        const std::size_t end = std::min(start + batch_size, order.size());
        std::vector<std::size_t> batch(order.begin() + static_cast<std::ptrdiff_t>(start),
                                       order.begin() + static_cast<std::ptrdiff_t>(end));
        apply_batch(result.model, xs, ys, batch, epoch_lr, config.l2);
      }
      const double loss = average_loss(result.model, xs, ys, config.l2);
      if (loss <= prev_loss + 1e-9) {
        accepted = loss;
        lr = epoch_lr;
        break;
      }
      result.model = snapshot;
      epoch_lr *= 0.5;
      if (epoch_lr < 1e-8) {
        accepted = prev_loss;  // keep the snapshot; loss unchanged
        break;
      }
    }
    prev_loss = accepted;
    result.epoch_losses.push_back(accepted);
  }
  return result;
}

double gradient_check(const std::vector<SparseVector>& xs,
                      const std::vector<Label>& ys, std::size_t features,
                      double l2, std::uint64_t seed) {
  LinearModel model(features, false);
  std::mt19937_64 g(rng::hash64(seed, {"gradcheck"}));
  const auto unit = [&g]() {
    // uniform in [-0.5, 0.5) from the top 53 bits
    return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0) - 0.5;
  };
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t f = 0; f < features; ++f) model.weight(c, f) = unit();
    model.bias(c) = unit();
  }

  // Analytic full-batch gradient.
  const double inv = 1.0 / static_cast<double>(xs.size());
  std::vector<double> grad_w(4 * features, 0.0);
  std::array<double, 4> grad_b{};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto p = model.probabilities(xs[i]);
    p[static_cast<std::size_t>(ys[i])] -= 1.0;
    for (std::size_t c = 0; c < 4; ++c) {
      grad_b[c] += inv * p[c];
      for (const auto& [idx, val] : xs[i])
        grad_w[c * features + idx] += inv * p[c] * static_cast<double>(val);
    }
  }
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t f = 0; f < features; ++f)
      grad_w[c * features + f] += l2 * model.weight(c, f);

  const double h = 1e-5;
  double max_rel = 0.0;
  const auto probe = [&](double& param, double analytic) {
    const double saved = param;
    param = saved + h;
    const double up = average_loss(model, xs, ys, l2);
    param = saved - h;
    const double down = average_loss(model, xs, ys, l2);
    param = saved;
    const double numeric = (up - down) / (2.0 * h);
    const double denom = std::max({1.0, std::abs(analytic), std::abs(numeric)});
    max_rel = std::max(max_rel, std::abs(analytic - numeric) / denom);
  };
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t f = 0; f < features; ++f)
      probe(model.weight(c, f), grad_w[c * features + f]);
    probe(model.bias(c), grad_b[c]);
  }
  return max_rel;
}

void LinearModel::save(const std::string& path, const Vocabulary& vocab,
                       const TrainConfig& config) const {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["kind"] = "lexical-baseline";
  j["classes"] = ojson::array();
  for (Label l : kAllLabels) j["classes"].push_back(std::string(to_string(l)));
  j["premise_only"] = premise_only_;
  j["features"] = features_;
  j["vocab"] = vocab.tokens();
  j["bias"] = bias_;
  j["weights"] = ojson::array();
  for (std::size_t c = 0; c < 4; ++c) {
    ojson row = ojson::array();
    for (std::size_t f = 0; f < features_; ++f) row.push_back(weight(c, f));
    j["weights"].push_back(std::move(row));
  }
  j["training"] = {{"epochs", config.epochs},
                   {"learning_rate", config.learning_rate},
                   {"l2", config.l2},
                   {"batch_size", config.batch_size},
                   {"seed", config.seed}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << j.dump() << "\n";
}

LinearModel::Loaded LinearModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("vocab") ||
      !j.contains("weights") || !j.contains("bias") || !j.contains("features"))
    throw std::runtime_error("malformed model file: " + path);

  Loaded loaded;
  loaded.vocab = Vocabulary::from_tokens(j["vocab"].get<std::vector<std::string>>());
  const auto features = j["features"].get<std::size_t>();
  loaded.model = LinearModel(features, j.value("premise_only", false));
  const auto& w = j["weights"];
  if (!w.is_array() || w.size() != 4)
    throw std::runtime_error("malformed model weights: " + path);
  for (std::size_t c = 0; c < 4; ++c) {
    if (w[c].size() != features)
      throw std::runtime_error("malformed model weights: " + path);
    for (std::size_t f = 0; f < features; ++f)
      loaded.model.weight(c, f) = w[c][f].get<double>();
    loaded.model.bias(c) = j["bias"][c].get<double>();
  }
  return loaded;
}

}  // namespace pairmine
