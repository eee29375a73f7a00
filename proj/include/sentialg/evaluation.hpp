#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentialg/bow.hpp"
#include "sentialg/classifiers.hpp"
#include "sentialg/corpus_io.hpp"
#include "sentialg/paragraph_vector.hpp"
#include "sentialg/split.hpp"

namespace sentialg {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  bool operator==(const ClassMetrics&) const = default;
};

struct Metrics {
  std::size_t total = 0;
  double accuracy = 0.0;
  ClassMetrics positive;
  ClassMetrics negative;
  double macro_f1 = 0.0;
  // confusion[gold][predicted], index 0 = Positive, 1 = Negative.
  std::array<std::array<std::size_t, 2>, 2> confusion{};
  bool operator==(const Metrics&) const = default;
};

// Gold and predicted labels must be Positive or Negative. Undefined ratios
// (no predictions or no support for a class) are reported as 0.
Metrics compute_metrics(std::span<const Label> gold, std::span<const Label> predicted);

enum class VectorizerKind { BOW, PVDM, PVDBOW, Merged };

inline constexpr std::array<VectorizerKind, 4> kAllVectorizers = {VectorizerKind::BOW, VectorizerKind::PVDM,
                                                                  VectorizerKind::PVDBOW, VectorizerKind::Merged};

std::string_view to_string(VectorizerKind kind);
std::optional<VectorizerKind> parse_vectorizer_kind(std::string_view text);

struct VectorizerConfig {
  std::size_t bow_min_count = 1;
  BowWeighting bow_weighting = BowWeighting::Count;
  PvHyperparameters pv;
  std::size_t infer_steps = 20;
};

// A fitted BOW or paragraph-vector model behind one interface.
class Vectorizer {
public:
  Vectorizer() = default;
  explicit Vectorizer(BowModel bow) : kind_(VectorizerKind::BOW), bow_(std::move(bow)) {}
  Vectorizer(ParagraphVectorModel pv, std::size_t infer_steps);

  VectorizerKind kind() const noexcept { return kind_; }
  std::size_t dimension() const;
  const std::optional<BowModel>& bow() const noexcept { return bow_; }
  const std::optional<ParagraphVectorModel>& pv() const noexcept { return pv_; }
  std::size_t infer_steps() const noexcept { return infer_steps_; }

  // BOW counts, or an inferred paragraph vector seeded from (seed, doc_id).
  FeatureVector transform(const std::vector<std::string>& tokens, std::uint64_t seed, std::string_view doc_id) const;

private:
  VectorizerKind kind_ = VectorizerKind::BOW;
  std::optional<BowModel> bow_;
  std::optional<ParagraphVectorModel> pv_;
  std::size_t infer_steps_ = 20;
};

TokenizedCorpus tokenize_all(const std::vector<LabeledText>& items);

// Fits on `corpus` and returns the training-set features alongside: BOW
// transforms, or the trained paragraph vectors.
Vectorizer fit_vectorizer(VectorizerKind kind, const TokenizedCorpus& corpus, const VectorizerConfig& config,
                          std::uint64_t seed, std::vector<FeatureVector>* training_features = nullptr);

// Writes `sentialg-bow v1` or `sentialg-pv v1` depending on the kind.
void save_vectorizer(const Vectorizer& vectorizer, const std::filesystem::path& path);
Vectorizer load_vectorizer(const std::filesystem::path& path, std::size_t infer_steps = 20);

enum class TestProtocol { Internal, External };
std::string_view to_string(TestProtocol protocol);

struct GridConfig {
  SplitSpec split;
  VectorizerConfig vectorizer;
  ClassifierHyperparameters classifier;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct GridCell {
  Script script = Script::Arabic;
  TestProtocol protocol = TestProtocol::Internal;
  VectorizerKind vectorizer = VectorizerKind::BOW;
  ClassifierKind classifier = ClassifierKind::LR;
  std::uint64_t seed = 0;
  std::size_t train_size = 0;
  std::size_t feature_dimension = 0;
  // Empty when the cell had no test data.
  std::optional<Metrics> metrics;
};

struct EvalReport {
  GridConfig config;
  // FNV-1a of each input corpus (ids, texts, labels, parts).
  std::uint64_t silver_fingerprint = 0;
  std::uint64_t external_fingerprint = 0;
  std::vector<GridCell> cells;
};

std::uint64_t fingerprint(const std::vector<LabeledText>& items);

// Every (Arabic, Arabizi) x (internal, external) x vectorizer x classifier
// cell. Internal cells train and test on the silver train/test parts (taken
// from existing split tags, else from config.split); external cells train on
// all silver data of the script and test on the gold set of the script.
EvalReport run_grid(const std::vector<LabeledText>& silver, const std::vector<LabeledText>& external,
                    const GridConfig& config);

Json to_json(const Metrics& metrics);
Json to_json(const EvalReport& report);
// Rows are vectorizer/classifier pairs; columns Acc and F1 per script and test.
std::string render_table(const EvalReport& report);

}  // namespace sentialg
