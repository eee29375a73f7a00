#pragma once

#include <cstdint>

#include "sentialg/classifiers.hpp"

namespace sentialg::detail {

inline double sign_target(Label label) { return label == Label::Positive ? 1.0 : -1.0; }

LinearParams train_svm(const LabeledDataset& data, const ClassifierHyperparameters& hp, TrainingTrace* trace);
LinearParams train_logistic(const LabeledDataset& data, const ClassifierHyperparameters& hp, TrainingTrace* trace);
NaiveBayesParams train_naive_bayes(const LabeledDataset& data, const ClassifierHyperparameters& hp);
double naive_bayes_score(const NaiveBayesParams& params, const FeatureVector& x);

std::size_t resolve_max_features(ClassifierKind kind, const ClassifierHyperparameters& hp, std::size_t dimension);
DecisionTree train_tree(const LabeledDataset& data, const ClassifierHyperparameters& hp, std::size_t max_features,
                        std::uint64_t seed);
ForestParams train_forest(const LabeledDataset& data, const ClassifierHyperparameters& hp, std::size_t max_features,
                          std::uint64_t seed, unsigned jobs);

}  // namespace sentialg::detail
