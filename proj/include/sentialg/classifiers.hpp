#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sentialg/features.hpp"
#include "sentialg/types.hpp"

namespace sentialg {

enum class ClassifierKind { SVM, NB, LR, DT, RF };

std::string_view to_string(ClassifierKind kind);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view text);

inline constexpr std::array<ClassifierKind, 5> kAllClassifiers = {ClassifierKind::SVM, ClassifierKind::NB,
                                                                  ClassifierKind::LR, ClassifierKind::DT,
                                                                  ClassifierKind::RF};

struct LabeledDataset {
  std::vector<FeatureVector> features;
  std::vector<Label> labels;  // Positive or Negative only

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t dimension() const { return features.empty() ? 0 : features.front().dimension(); }
  // Equal lengths, uniform dimension, binary labels; optionally both classes.
  void validate(bool require_both_classes) const;
};

struct ClassifierHyperparameters {
  // Linear SVM: (1/2Cn)|w|^2 + mean hinge, full-batch subgradient descent.
  double svm_c = 1.0;
  std::size_t svm_epochs = 100;
  double svm_learning_rate = 0.1;
  // Logistic regression: mean log-loss + (lambda/2)|w|^2, gradient descent.
  double lr_lambda = 1e-4;
  double lr_learning_rate = 0.1;
  std::size_t lr_epochs = 200;
  // Naive Bayes Laplace smoothing (multinomial only).
  double nb_alpha = 1.0;
  // Trees.
  std::size_t max_depth = 20;
  std::size_t min_leaf = 2;
  // Features tried per split; unset means all for DT and floor(sqrt(d)) for RF.
  std::optional<std::size_t> max_features;
  std::size_t rf_trees = 100;
  bool rf_bootstrap = true;

  void validate() const;
  bool operator==(const ClassifierHyperparameters&) const = default;
};

struct LinearParams {
  std::vector<double> weights;
  double bias = 0.0;
  bool operator==(const LinearParams&) const = default;
};

struct NaiveBayesParams {
  bool multinomial = true;
  std::array<double, 2> log_prior{};  // [positive, negative]
  // Multinomial: log feature probabilities. Gaussian: means and variances.
  std::array<std::vector<double>, 2> location;
  std::array<std::vector<double>, 2> variance;
  bool operator==(const NaiveBayesParams&) const = default;
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;     // value <= threshold goes left
  std::int32_t left = -1;
  std::int32_t right = -1;
  double positive_fraction = 0.0;
  std::uint32_t samples = 0;
  bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  bool operator==(const DecisionTree&) const = default;
};

using ForestParams = std::vector<DecisionTree>;

class TrainedModel {
public:
  using Params = std::variant<LinearParams, NaiveBayesParams, DecisionTree, ForestParams>;

  TrainedModel() = default;
  TrainedModel(ClassifierKind kind, std::size_t dimension, std::uint64_t seed, ClassifierHyperparameters hp,
               Params params)
      : kind_(kind), dimension_(dimension), seed_(seed), hp_(std::move(hp)), params_(std::move(params)) {}

  ClassifierKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const ClassifierHyperparameters& hyperparameters() const noexcept { return hp_; }
  const Params& params() const noexcept { return params_; }

  // Margin (SVM, LR), log posterior ratio (NB), or positive fraction minus
  // one half (DT leaf, RF vote). Positive when >= 0, so ties go Positive.
  double predict_score(const FeatureVector& x) const;
  Label predict(const FeatureVector& x) const { return predict_score(x) >= 0.0 ? Label::Positive : Label::Negative; }

  bool operator==(const TrainedModel&) const = default;

private:
  ClassifierKind kind_ = ClassifierKind::LR;
  std::size_t dimension_ = 0;
  std::uint64_t seed_ = 0;
  ClassifierHyperparameters hp_;
  Params params_;
};

// Objective value after each accepted step (SVM and LR only).
struct TrainingTrace {
  std::vector<double> loss;
};

TrainedModel train(ClassifierKind kind, const LabeledDataset& dataset, const ClassifierHyperparameters& hp,
                   std::uint64_t seed, unsigned jobs = 1, TrainingTrace* trace = nullptr);

struct LossGradient {
  double loss = 0.0;
  std::vector<double> weights;
  double bias = 0.0;
};

// Mean logistic loss plus (lambda/2)|w|^2 and its gradient.
LossGradient logistic_loss_gradient(std::span<const double> weights, double bias, const LabeledDataset& data,
                                    double lambda);
// (lambda/2)|w|^2 + mean hinge and one subgradient.
LossGradient hinge_loss_subgradient(std::span<const double> weights, double bias, const LabeledDataset& data,
                                    double lambda);

double tree_score(const DecisionTree& tree, const FeatureVector& x);

inline constexpr std::string_view kModelHeader = "sentialg-model v1";

std::string serialize_model(const TrainedModel& model);
TrainedModel parse_model(std::string_view contents);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace sentialg
