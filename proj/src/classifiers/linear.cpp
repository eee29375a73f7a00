#include <cmath>
#include <functional>

#include "classifiers/internal.hpp"

namespace sentialg {

namespace {

double squared_norm(std::span<const double> w) {
  double s = 0.0;
  for (double x : w) s += x * x;
  return s;
}

// log(1 + exp(-m)) without overflow.
double log1p_exp_neg(double m) {
  if (m > 0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

}  // namespace

LossGradient logistic_loss_gradient(std::span<const double> weights, double bias, const LabeledDataset& data,
                                    double lambda) {
  const double n = static_cast<double>(data.size());
  LossGradient g;
  g.weights.assign(weights.size(), 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double y = detail::sign_target(data.labels[i]);
    const double margin = y * (data.features[i].dot(weights) + bias);
    g.loss += log1p_exp_neg(margin);
    // d/dz log(1+exp(-y z)) = -y * sigmoid(-y z)
    const double s = margin >= 0 ? std::exp(-margin) / (1.0 + std::exp(-margin)) : 1.0 / (1.0 + std::exp(margin));
    const double coeff = -y * s / n;
    data.features[i].add_to(g.weights, coeff);
    g.bias += coeff;
  }
  g.loss /= n;
  g.loss += 0.5 * lambda * squared_norm(weights);
  for (std::size_t j = 0; j < weights.size(); ++j) g.weights[j] += lambda * weights[j];
  return g;
}

LossGradient hinge_loss_subgradient(std::span<const double> weights, double bias, const LabeledDataset& data,
                                    double lambda) {
  const double n = static_cast<double>(data.size());
  LossGradient g;
  g.weights.assign(weights.size(), 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double y = detail::sign_target(data.labels[i]);
    const double margin = y * (data.features[i].dot(weights) + bias);
    if (margin < 1.0) {
      g.loss += 1.0 - margin;
      data.features[i].add_to(g.weights, -y / n);
      g.bias += -y / n;
    }
  }
  g.loss /= n;
  g.loss += 0.5 * lambda * squared_norm(weights);
  for (std::size_t j = 0; j < weights.size(); ++j) g.weights[j] += lambda * weights[j];
  return g;
}

namespace detail {

namespace {

using Objective = std::function<LossGradient(std::span<const double>, double)>;

// Full-batch descent. A step is accepted only if the objective does not
// increase; otherwise the step size halves. Accepted steps grow it by 10%.
LinearParams descend(std::size_t dimension, const Objective& objective, double step, std::size_t epochs,
                     TrainingTrace* trace) {
  constexpr int kMaxHalvings = 40;
  LinearParams p;
  p.weights.assign(dimension, 0.0);
  auto current = objective(p.weights, p.bias);
  if (trace) trace->loss.push_back(current.loss);
  std::vector<double> candidate(dimension);
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxHalvings; ++attempt) {
      for (std::size_t j = 0; j < dimension; ++j) candidate[j] = p.weights[j] - step * current.weights[j];
      const double candidate_bias = p.bias - step * current.bias;
      auto next = objective(candidate, candidate_bias);
      if (std::isfinite(next.loss) && next.loss <= current.loss) {
        p.weights.swap(candidate);
        p.bias = candidate_bias;
        current = std::move(next);
        step *= 1.1;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if (trace) trace->loss.push_back(current.loss);
  }
  return p;
}

}  // namespace

LinearParams train_svm(const LabeledDataset& data, const ClassifierHyperparameters& hp, TrainingTrace* trace) {
  const double lambda = 1.0 / (hp.svm_c * static_cast<double>(data.size()));
  return descend(
      data.dimension(), [&](std::span<const double> w, double b) { return hinge_loss_subgradient(w, b, data, lambda); },
      hp.svm_learning_rate, hp.svm_epochs, trace);
}

LinearParams train_logistic(const LabeledDataset& data, const ClassifierHyperparameters& hp, TrainingTrace* trace) {
  return descend(
      data.dimension(),
      [&](std::span<const double> w, double b) { return logistic_loss_gradient(w, b, data, hp.lr_lambda); },
      hp.lr_learning_rate, hp.lr_epochs, trace);
}

}  // namespace detail
}  // namespace sentialg
