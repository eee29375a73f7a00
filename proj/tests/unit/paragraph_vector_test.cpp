#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"
#include "sentialg/paragraph_vector.hpp"

namespace sentialg {
namespace {

using testing::numeric_gradient;
using testing::relative_error;

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& x : m.data) x = rng.uniform(-1.0, 1.0);
  return m;
}

std::vector<double> random_vector(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

std::vector<std::uint32_t> random_ids(Rng& rng, std::size_t count, std::size_t bound) {
  std::vector<std::uint32_t> out(count);
  for (auto& x : out) x = static_cast<std::uint32_t>(rng.index(bound));
  return out;
}

// Scatters per-row gradients (in the order of `ids`) into a full matrix.
std::vector<double> scatter(const std::vector<double>& rows, const std::vector<std::uint32_t>& ids, std::size_t nrows,
                            std::size_t width) {
  std::vector<double> full(nrows * width, 0.0);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (std::size_t c = 0; c < width; ++c) full[ids[k] * width + c] += rows[k * width + c];
  }
  return full;
}

TEST(PvGradients, DbowMatchesFiniteDifferences) {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng.index(8);
    const std::size_t vocab = 2 + rng.index(10);
    const auto outputs = random_matrix(rng, vocab, dim);
    const auto hidden = random_vector(rng, dim);
    const auto target = static_cast<std::uint32_t>(rng.index(vocab));
    const auto negatives = random_ids(rng, 1 + rng.index(5), vocab);
    const auto g = negative_sampling_gradients(hidden, outputs, target, negatives);

    auto f_hidden = [&](const std::vector<double>& h) {
      return negative_sampling_gradients(h, outputs, target, negatives).loss;
    };
    ASSERT_LE(relative_error(g.hidden, numeric_gradient(f_hidden, hidden)), 1e-4);

    std::vector<std::uint32_t> ids = {target};
    ids.insert(ids.end(), negatives.begin(), negatives.end());
    auto f_outputs = [&](const std::vector<double>& data) {
      Matrix m = outputs;
      m.data = data;
      return negative_sampling_gradients(hidden, m, target, negatives).loss;
    };
    ASSERT_LE(relative_error(scatter(g.outputs, ids, vocab, dim), numeric_gradient(f_outputs, outputs.data)), 1e-4);
  }
}

void check_dm(PvComposition composition, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng.index(6);
    const std::size_t vocab = 2 + rng.index(8);
    const std::size_t window = 1 + rng.index(3);
    const auto words = random_matrix(rng, vocab + 1, dim);
    const std::size_t width = composition == PvComposition::Concatenate ? dim * (1 + window) : dim;
    const auto outputs = random_matrix(rng, vocab, width);
    const auto doc = random_vector(rng, dim);
    const auto context = composition == PvComposition::Concatenate ? random_ids(rng, window, vocab + 1)
                                                                   : random_ids(rng, rng.index(window + 1), vocab);
    const auto target = static_cast<std::uint32_t>(rng.index(vocab));
    const auto negatives = random_ids(rng, 1 + rng.index(5), vocab);
    const auto g = pvdm_gradients(doc, words, context, composition, outputs, target, negatives);

    auto f_doc = [&](const std::vector<double>& d) {
      return pvdm_gradients(d, words, context, composition, outputs, target, negatives).loss;
    };
    ASSERT_LE(relative_error(g.doc, numeric_gradient(f_doc, doc)), 1e-4);

    auto f_words = [&](const std::vector<double>& data) {
      Matrix m = words;
      m.data = data;
      return pvdm_gradients(doc, m, context, composition, outputs, target, negatives).loss;
    };
    if (!context.empty()) {
      ASSERT_LE(relative_error(scatter(g.context, context, vocab + 1, dim), numeric_gradient(f_words, words.data)),
                1e-4);
    }

    std::vector<std::uint32_t> ids = {target};
    ids.insert(ids.end(), negatives.begin(), negatives.end());
    auto f_outputs = [&](const std::vector<double>& data) {
      Matrix m = outputs;
      m.data = data;
      return pvdm_gradients(doc, words, context, composition, m, target, negatives).loss;
    };
    ASSERT_LE(relative_error(scatter(g.outputs, ids, vocab, width), numeric_gradient(f_outputs, outputs.data)), 1e-4);
  }
}

TEST(PvGradients, DmConcatenateMatchesFiniteDifferences) { check_dm(PvComposition::Concatenate, 202); }
TEST(PvGradients, DmAverageMatchesFiniteDifferences) { check_dm(PvComposition::Average, 203); }

TokenizedCorpus toy_corpus() {
  return {{"the", "cat", "sat", "on", "the", "mat"},
          {"dogs", "bark", "at", "the", "moon", "dogs", "run"},
          {"cat", "and", "dogs", "play", "on", "the", "grass"},
          {"mlih", "bzf", "mlih", "zin", "bzf"},
          {"khayeb", "bzf", "machi", "mlih", "khayeb"}};
}

PvHyperparameters small_hp() {
  PvHyperparameters hp;
  hp.dim = 8;
  hp.window = 2;
  hp.epochs = 30;
  hp.negative = 3;
  hp.min_count = 1;
  return hp;
}

TEST(PvTrain, LossDecreasesAndVectorsFinite) {
  for (auto mode : {PvMode::PVDM, PvMode::PVDBOW}) {
    PvTrainingStats stats;
    auto hp = small_hp();
    auto model = pv_train(toy_corpus(), mode, hp, 7, &stats);
    ASSERT_EQ(stats.epoch_loss.size(), hp.epochs);
    EXPECT_LT(stats.epoch_loss.back(), stats.initial_loss);
    for (std::size_t d = 0; d < model.document_count(); ++d) {
      for (double x : model.document_vector(d).values()) ASSERT_TRUE(std::isfinite(x));
    }
  }
}

TEST(PvTrain, SingleEpochStillImproves) {
  auto hp = small_hp();
  hp.dim = 4;
  hp.epochs = 1;
  PvTrainingStats stats;
  pv_train({{"a", "b", "a"}, {"b", "c"}}, PvMode::PVDBOW, hp, 1, &stats);
  EXPECT_LT(stats.epoch_loss.back(), stats.initial_loss);
}

TEST(PvTrain, DeterministicForSeed) {
  auto a = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 5);
  auto b = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 5);
  EXPECT_EQ(a, b);
  auto c = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 6);
  EXPECT_FALSE(a == c);
}

TEST(PvTrain, MergedHalvesEqualStandaloneModels) {
  auto merged = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 9);
  auto dm = pv_train(toy_corpus(), PvMode::PVDM, small_hp(), 9);
  auto dbow = pv_train(toy_corpus(), PvMode::PVDBOW, small_hp(), 9);
  EXPECT_EQ(merged.extract(PvMode::PVDM), dm);
  EXPECT_EQ(merged.extract(PvMode::PVDBOW), dbow);
  EXPECT_EQ(merged.output_dimension(), 2 * small_hp().dim);
  auto v = merged.document_vector(1).values();
  auto a = dm.document_vector(1).values();
  auto b = dbow.document_vector(1).values();
  a.insert(a.end(), b.begin(), b.end());
  EXPECT_EQ(v, a);
  EXPECT_THROW(dm.extract(PvMode::PVDBOW), InvalidHyperparameter);
}

TEST(PvTrain, Errors) {
  EXPECT_THROW(pv_train({}, PvMode::PVDM, small_hp(), 1), EmptyCorpus);
  auto hp = small_hp();
  hp.window = 0;
  EXPECT_THROW(pv_train(toy_corpus(), PvMode::PVDM, hp, 1), InvalidHyperparameter);
  hp = small_hp();
  hp.learning_rate = -1;
  EXPECT_THROW(pv_train(toy_corpus(), PvMode::PVDM, hp, 1), InvalidHyperparameter);
}

TEST(PvTrain, AverageCompositionTrains) {
  auto hp = small_hp();
  hp.composition = PvComposition::Average;
  PvTrainingStats stats;
  auto model = pv_train(toy_corpus(), PvMode::PVDM, hp, 3, &stats);
  EXPECT_LT(stats.epoch_loss.back(), stats.initial_loss);
  EXPECT_EQ(model.dm()->outputs.cols, hp.dim);
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

TEST(PvInfer, ApproximatesTrainedVector) {
  auto hp = small_hp();
  hp.epochs = 200;
  const auto corpus = toy_corpus();
  for (auto mode : {PvMode::PVDBOW, PvMode::PVDM}) {
    auto model = pv_train(corpus, mode, hp, 11);
    double total = 0.0;
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      auto inferred = pv_infer(model, corpus[d], 200, 99 + d);
      total += cosine(inferred.values(), model.document_vector(d).values());
    }
    EXPECT_GE(total / static_cast<double>(corpus.size()), 0.7) << to_string(mode);
  }
}

TEST(PvInfer, EmptyDocumentKeepsInitialVectorAndIsDeterministic) {
  auto model = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 4);
  auto a = pv_infer(model, {}, 10, 3);
  auto b = pv_infer(model, {"unknown", "words"}, 10, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dimension(), 2 * small_hp().dim);
  for (double x : a.values()) EXPECT_LE(std::abs(x), 0.5 / static_cast<double>(small_hp().dim));
  EXPECT_EQ(pv_infer(model, toy_corpus()[0], 10, 3), pv_infer(model, toy_corpus()[0], 10, 3));
}

TEST(PvInfer, MergedIsConcatenationOfHalves) {
  auto model = pv_train(toy_corpus(), PvMode::Merged, small_hp(), 4);
  auto merged = pv_infer(model, toy_corpus()[2], 5, 8).values();
  auto dm = pv_infer(model.extract(PvMode::PVDM), toy_corpus()[2], 5, 8).values();
  auto dbow = pv_infer(model.extract(PvMode::PVDBOW), toy_corpus()[2], 5, 8).values();
  dm.insert(dm.end(), dbow.begin(), dbow.end());
  EXPECT_EQ(merged, dm);
}

TEST(PvFile, RoundTripIsExact) {
  for (auto mode : {PvMode::PVDM, PvMode::PVDBOW, PvMode::Merged}) {
    auto model = pv_train(toy_corpus(), mode, small_hp(), 12);
    auto bytes = serialize_pv(model);
    auto back = parse_pv(bytes);
    EXPECT_EQ(back, model);
    EXPECT_EQ(serialize_pv(back), bytes);
    EXPECT_EQ(pv_infer(back, toy_corpus()[1], 5, 1), pv_infer(model, toy_corpus()[1], 5, 1));
  }
}

TEST(PvFile, RejectsTruncationAndWrongHeader) {
  auto bytes = serialize_pv(pv_train(toy_corpus(), PvMode::PVDBOW, small_hp(), 12));
  EXPECT_THROW(parse_pv(bytes.substr(0, bytes.size() - 9)), Error);
  EXPECT_THROW(parse_pv("sentialg-pv v9\n"), FormatVersionMismatch);
}

}  // namespace
}  // namespace sentialg
