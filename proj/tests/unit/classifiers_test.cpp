#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sentialg/classifiers.hpp"
#include "sentialg/errors.hpp"
#include "sentialg/evaluation.hpp"

namespace sentialg {
namespace {

using testing::separable_fixture;
using testing::sparse_count_fixture;

double macro_f1(const TrainedModel& model, const LabeledDataset& test) {
  std::vector<Label> predicted;
  for (const auto& x : test.features) predicted.push_back(model.predict(x));
  return compute_metrics(test.labels, predicted).macro_f1;
}

LabeledDataset tiny_separable() {
  LabeledDataset d;
  for (int i = 0; i < 20; ++i) {
    const double x = (i % 10) * 0.1;
    const bool pos = i < 10;
    d.features.push_back(FeatureVector::dense({pos ? 1.0 + x : -1.0 - x, pos ? x : -x}));
    d.labels.push_back(pos ? Label::Positive : Label::Negative);
  }
  return d;
}

TEST(Classifiers, SeparableToySetFitsExactly) {
  const auto data = tiny_separable();
  for (auto kind : {ClassifierKind::SVM, ClassifierKind::LR, ClassifierKind::DT}) {
    auto model = train(kind, data, {}, 1);
    EXPECT_EQ(macro_f1(model, data), 1.0) << to_string(kind);
  }
}

TEST(Classifiers, AllReachHighF1OnClusters) {
  const auto train_set = separable_fixture(200, 4, 1);
  const auto test_set = separable_fixture(200, 4, 2);
  for (auto kind : kAllClassifiers) {
    auto model = train(kind, train_set, {}, 3);
    EXPECT_GE(macro_f1(model, test_set), 0.95) << to_string(kind);
  }
}

TEST(Classifiers, SparseCountsUseMultinomialNaiveBayes) {
  const auto data = sparse_count_fixture(200, 20, 4);
  auto model = train(ClassifierKind::NB, data, {}, 0);
  EXPECT_TRUE(std::get<NaiveBayesParams>(model.params()).multinomial);
  EXPECT_GE(macro_f1(model, sparse_count_fixture(200, 20, 5)), 0.9);
  auto dense = train(ClassifierKind::NB, separable_fixture(50, 2, 1), {}, 0);
  EXPECT_FALSE(std::get<NaiveBayesParams>(dense.params()).multinomial);
}

TEST(Classifiers, NaiveBayesFeatureOnlyInPositive) {
  LabeledDataset d;
  d.features = {FeatureVector::sparse(3, {{0, 1}, {2, 1}}), FeatureVector::sparse(3, {{1, 1}, {2, 1}}),
                FeatureVector::sparse(3, {{1, 2}})};
  d.labels = {Label::Positive, Label::Negative, Label::Negative};
  auto model = train(ClassifierKind::NB, d, {}, 0);
  // By hand: P(pos)=1/3, theta_pos(0)=2/5; P(neg)=2/3, theta_neg(0)=1/7.
  const double expected = std::log(1.0 / 3.0) + std::log(2.0 / 5.0) - std::log(2.0 / 3.0) - std::log(1.0 / 7.0);
  const auto x = FeatureVector::sparse(3, {{0, 1}});
  EXPECT_NEAR(model.predict_score(x), expected, 1e-12);
  EXPECT_EQ(model.predict(x), Label::Positive);
}

TEST(Classifiers, LogisticGradientMatchesFiniteDifferences) {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.index(10);
    const std::size_t d = 1 + rng.index(6);
    LabeledDataset data;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> x(d);
      for (auto& v : x) v = rng.uniform(-2.0, 2.0);
      data.features.push_back(FeatureVector::dense(x));
      data.labels.push_back(rng.index(2) == 0 ? Label::Positive : Label::Negative);
    }
    std::vector<double> params(d + 1);
    for (auto& v : params) v = rng.uniform(-1.0, 1.0);
    const double lambda = rng.uniform(0.0, 0.5);
    auto f = [&](const std::vector<double>& p) {
      return logistic_loss_gradient(std::span<const double>(p.data(), d), p[d], data, lambda).loss;
    };
    auto g = logistic_loss_gradient(std::span<const double>(params.data(), d), params[d], data, lambda);
    auto analytic = g.weights;
    analytic.push_back(g.bias);
    ASSERT_LE(testing::relative_error(analytic, testing::numeric_gradient(f, params)), 1e-4);
  }
}

TEST(Classifiers, HingeSubgradientMatchesAwayFromKinks) {
  Rng rng(56);
  int checked = 0;
  while (checked < 50) {
    LabeledDataset data;
    for (int i = 0; i < 8; ++i) {
      data.features.push_back(FeatureVector::dense({rng.uniform(-2, 2), rng.uniform(-2, 2)}));
      data.labels.push_back(rng.index(2) == 0 ? Label::Positive : Label::Negative);
    }
    std::vector<double> p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    bool near_kink = false;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double m = (data.labels[i] == Label::Positive ? 1 : -1) * (data.features[i].dot({p.data(), 2}) + p[2]);
      near_kink = near_kink || std::abs(m - 1.0) < 1e-3;
    }
    if (near_kink) continue;
    auto f = [&](const std::vector<double>& q) {
      return hinge_loss_subgradient(std::span<const double>(q.data(), 2), q[2], data, 0.1).loss;
    };
    auto g = hinge_loss_subgradient(std::span<const double>(p.data(), 2), p[2], data, 0.1);
    auto analytic = g.weights;
    analytic.push_back(g.bias);
    ASSERT_LE(testing::relative_error(analytic, testing::numeric_gradient(f, p, 1e-6)), 1e-4);
    ++checked;
  }
}

TEST(Classifiers, LinearLossIsMonotone) {
  const auto data = separable_fixture(200, 4, 9);
  for (auto kind : {ClassifierKind::SVM, ClassifierKind::LR}) {
    TrainingTrace trace;
    train(kind, data, {}, 0, 1, &trace);
    ASSERT_GE(trace.loss.size(), 2u);
    for (std::size_t i = 1; i < trace.loss.size(); ++i) ASSERT_LE(trace.loss[i], trace.loss[i - 1] + 1e-9);
    EXPECT_LT(trace.loss.back(), trace.loss.front());
  }
}

TEST(Classifiers, ZeroWeightTieGoesPositive) {
  TrainedModel model(ClassifierKind::LR, 2, 0, {}, LinearParams{{0.0, 0.0}, 0.0});
  const auto x = FeatureVector::dense({1.0, -1.0});
  EXPECT_EQ(model.predict_score(x), 0.0);
  EXPECT_EQ(model.predict(x), Label::Positive);
}

TEST(Classifiers, ForestOfIdenticalTreesAgreesWithTree) {
  const auto data = separable_fixture(100, 3, 4);
  auto dt = train(ClassifierKind::DT, data, {}, 8);
  const auto& tree = std::get<DecisionTree>(dt.params());
  TrainedModel forest(ClassifierKind::RF, 3, 8, {}, ForestParams{tree, tree, tree});
  const auto probe = separable_fixture(100, 3, 5);
  for (const auto& x : probe.features) ASSERT_EQ(forest.predict(x), dt.predict(x));
}

TEST(Classifiers, ForestWithOneTreeNoBootstrapEqualsTree) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto data = seed == 3 ? sparse_count_fixture(150, 30, seed) : separable_fixture(150, 5, seed);
    ClassifierHyperparameters hp;
    hp.rf_trees = 1;
    hp.rf_bootstrap = false;
    hp.max_features = 2;
    auto dt = train(ClassifierKind::DT, data, hp, seed);
    auto rf = train(ClassifierKind::RF, data, hp, seed);
    ASSERT_EQ(std::get<ForestParams>(rf.params()).size(), 1u);
    EXPECT_EQ(std::get<ForestParams>(rf.params())[0], std::get<DecisionTree>(dt.params()));
  }
}

TEST(Classifiers, TreePredictionsEqualBruteForceWalk) {
  const auto data = separable_fixture(200, 4, 6);
  auto dt = train(ClassifierKind::DT, data, {}, 2);
  const auto& tree = std::get<DecisionTree>(dt.params());
  const auto probe = separable_fixture(300, 4, 7);
  for (const auto& x : probe.features) ASSERT_EQ(dt.predict_score(x), testing::walk_tree(tree, x.to_dense()));
}

double gini(double pos, double n) {
  if (n == 0) return 0;
  const double p = pos / n;
  return 1 - p * p - (1 - p) * (1 - p);
}

TEST(Classifiers, EverySplitLowersGini) {
  for (std::uint64_t seed : {11u, 12u}) {
    const auto data = seed == 11 ? separable_fixture(200, 4, seed) : sparse_count_fixture(200, 24, seed);
    auto dt = train(ClassifierKind::DT, data, {}, seed);
    const auto& tree = std::get<DecisionTree>(dt.params());
    // Route training points to count positives per node.
    std::vector<double> pos(tree.nodes.size(), 0), total(tree.nodes.size(), 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto x = data.features[i].to_dense();
      std::size_t node = 0;
      while (true) {
        total[node] += 1;
        pos[node] += data.labels[i] == Label::Positive ? 1 : 0;
        const auto& nd = tree.nodes[node];
        if (nd.feature < 0) break;
        node = static_cast<std::size_t>(x[nd.feature] <= nd.threshold ? nd.left : nd.right);
      }
    }
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
      const auto& nd = tree.nodes[k];
      ASSERT_EQ(total[k], nd.samples);
      if (nd.feature < 0) continue;
      const auto l = static_cast<std::size_t>(nd.left);
      const auto r = static_cast<std::size_t>(nd.right);
      const double children = (total[l] * gini(pos[l], total[l]) + total[r] * gini(pos[r], total[r])) / total[k];
      ASSERT_LT(children, gini(pos[k], total[k]));
      ASSERT_GE(total[l], 2.0);
      ASSERT_GE(total[r], 2.0);
    }
  }
}

TEST(Classifiers, TreeTrainingPointInPureLeafGetsItsLabel) {
  const auto data = separable_fixture(120, 3, 21);
  auto dt = train(ClassifierKind::DT, data, {}, 0);
  const auto& tree = std::get<DecisionTree>(dt.params());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto x = data.features[i].to_dense();
    std::size_t node = 0;
    while (tree.nodes[node].feature >= 0) {
      const auto& nd = tree.nodes[node];
      node = static_cast<std::size_t>(x[nd.feature] <= nd.threshold ? nd.left : nd.right);
    }
    const double frac = tree.nodes[node].positive_fraction;
    if (frac == 0.0 || frac == 1.0) {
      ASSERT_EQ(dt.predict(data.features[i]), data.labels[i]);
    }
  }
}

TEST(Classifiers, ForestIndependentOfJobs) {
  const auto data = separable_fixture(150, 6, 30);
  ClassifierHyperparameters hp;
  hp.rf_trees = 12;
  EXPECT_EQ(train(ClassifierKind::RF, data, hp, 5, 1), train(ClassifierKind::RF, data, hp, 5, 4));
}

TEST(Classifiers, DeterministicForSeed) {
  const auto data = sparse_count_fixture(100, 16, 3);
  for (auto kind : kAllClassifiers) EXPECT_EQ(train(kind, data, {}, 4), train(kind, data, {}, 4));
}

TEST(Classifiers, Errors) {
  auto data = separable_fixture(20, 2, 1);
  auto single = data;
  for (auto& l : single.labels) l = Label::Positive;
  EXPECT_THROW(train(ClassifierKind::LR, single, {}, 0), SingleClassDataset);
  auto ragged = data;
  ragged.features[3] = FeatureVector::dense({1.0, 2.0, 3.0});
  EXPECT_THROW(train(ClassifierKind::LR, ragged, {}, 0), DimensionMismatch);
  auto model = train(ClassifierKind::LR, data, {}, 0);
  EXPECT_THROW(model.predict(FeatureVector::dense({1.0})), DimensionMismatch);
  ClassifierHyperparameters hp;
  hp.svm_c = 0;
  EXPECT_THROW(train(ClassifierKind::SVM, data, hp, 0), InvalidHyperparameter);
  auto short_labels = data;
  short_labels.labels.pop_back();
  EXPECT_THROW(train(ClassifierKind::LR, short_labels, {}, 0), LengthMismatch);
}

TEST(ModelFile, RoundTripIsExactForEveryKind) {
  const auto dense = separable_fixture(80, 3, 1);
  const auto sparse = sparse_count_fixture(80, 12, 2);
  ClassifierHyperparameters hp;
  hp.rf_trees = 7;
  hp.max_features = 2;
  for (const auto* data : {&dense, &sparse}) {
    for (auto kind : kAllClassifiers) {
      auto model = train(kind, *data, hp, 42);
      auto text = serialize_model(model);
      auto back = parse_model(text);
      ASSERT_EQ(back, model) << to_string(kind);
      ASSERT_EQ(serialize_model(back), text);
    }
  }
}

TEST(ModelFile, RejectsBadInput) {
  EXPECT_THROW(parse_model("sentialg-model v0\n"), FormatVersionMismatch);
  auto text = serialize_model(train(ClassifierKind::LR, separable_fixture(30, 2, 1), {}, 0));
  EXPECT_THROW(parse_model(text.substr(0, text.size() / 2)), MalformedLine);
  EXPECT_THROW(parse_model(text + "extra\n"), MalformedLine);
}

}  // namespace
}  // namespace sentialg
