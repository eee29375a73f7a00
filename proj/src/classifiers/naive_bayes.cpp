#include <algorithm>
#include <cmath>

#include "classifiers/internal.hpp"
#include "sentialg/errors.hpp"

namespace sentialg::detail {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;
constexpr double kVarianceSmoothing = 1e-9;

int class_slot(Label label) { return label == Label::Positive ? 0 : 1; }

bool sparse_nonnegative(const LabeledDataset& data) {
  for (const auto& x : data.features) {
    if (!x.is_sparse()) return false;
    for (double v : x.values()) {
      if (v < 0) return false;
    }
  }
  return true;
}

}  // namespace

NaiveBayesParams train_naive_bayes(const LabeledDataset& data, const ClassifierHyperparameters& hp) {
  const std::size_t d = data.dimension();
  const double n = static_cast<double>(data.size());
  NaiveBayesParams p;
  p.multinomial = sparse_nonnegative(data);

  std::array<double, 2> class_count{};
  for (auto label : data.labels) class_count[class_slot(label)] += 1.0;
  for (int c = 0; c < 2; ++c) p.log_prior[c] = std::log(class_count[c] / n);

  if (p.multinomial) {
    std::array<std::vector<double>, 2> totals{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
    for (std::size_t i = 0; i < data.size(); ++i) data.features[i].add_to(totals[class_slot(data.labels[i])], 1.0);
    for (int c = 0; c < 2; ++c) {
      double mass = 0.0;
      for (double v : totals[c]) mass += v;
      const double denom = mass + hp.nb_alpha * static_cast<double>(d);
      p.location[c].resize(d);
      for (std::size_t j = 0; j < d; ++j) p.location[c][j] = std::log((totals[c][j] + hp.nb_alpha) / denom);
    }
    return p;
  }

  // Gaussian: per-class mean and variance, with a variance floor scaled by
  // the largest feature variance over the whole set.
  std::vector<double> overall_mean(d, 0.0);
  for (int c = 0; c < 2; ++c) {
    p.location[c].assign(d, 0.0);
    p.variance[c].assign(d, 0.0);
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int c = class_slot(data.labels[i]);
    data.features[i].add_to(p.location[c], 1.0 / class_count[c]);
    data.features[i].add_to(overall_mean, 1.0 / n);
  }
  std::vector<double> overall_var(d, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int c = class_slot(data.labels[i]);
    auto x = data.features[i].to_dense();
    for (std::size_t j = 0; j < d; ++j) {
      const double dc = x[j] - p.location[c][j];
      const double dall = x[j] - overall_mean[j];
      p.variance[c][j] += dc * dc / class_count[c];
      overall_var[j] += dall * dall / n;
    }
  }
  double max_var = 0.0;
  for (double v : overall_var) max_var = std::max(max_var, v);
  const double epsilon = kVarianceSmoothing * (max_var > 0 ? max_var : 1.0);
  for (int c = 0; c < 2; ++c) {
    for (auto& v : p.variance[c]) v += epsilon;
  }
  return p;
}

double naive_bayes_score(const NaiveBayesParams& p, const FeatureVector& x) {
  std::array<double, 2> log_post = p.log_prior;
  if (p.multinomial) {
    for (int c = 0; c < 2; ++c) log_post[c] += x.dot(p.location[c]);
  } else {
    const auto dense = x.to_dense();
    for (int c = 0; c < 2; ++c) {
      for (std::size_t j = 0; j < dense.size(); ++j) {
        const double diff = dense[j] - p.location[c][j];
        log_post[c] -= 0.5 * (kLogTwoPi + std::log(p.variance[c][j]) + diff * diff / p.variance[c][j]);
      }
    }
  }
  return log_post[0] - log_post[1];
}

}  // namespace sentialg::detail
