#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentialg/bow.hpp"
#include "sentialg/features.hpp"

namespace sentialg {

enum class PvMode { PVDM, PVDBOW, Merged };

// How PV-DM joins the document vector with its context words.
enum class PvComposition { Concatenate, Average };

std::string_view to_string(PvMode mode);
std::optional<PvMode> parse_pv_mode(std::string_view text);

struct PvHyperparameters {
  std::size_t dim = 100;
  std::size_t window = 5;
  std::size_t epochs = 20;
  std::size_t negative = 5;
  std::size_t min_count = 2;
  double learning_rate = 0.025;  // decays linearly to learning_rate * 1e-4
  PvComposition composition = PvComposition::Concatenate;

  void validate() const;
  bool operator==(const PvHyperparameters&) const = default;
};

// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

  bool operator==(const Matrix&) const = default;
};

// Parameters of one training mode. `words` holds PV-DM input vectors with a
// trailing padding row (empty for PV-DBOW); `outputs` are the
// negative-sampling output vectors; `docs` the paragraph vectors.
struct PvNetwork {
  Matrix words;
  Matrix outputs;
  Matrix docs;

  bool operator==(const PvNetwork&) const = default;
};

// Loss -log s(u_t.h) - sum_k log s(-u_k.h) and its gradients for one
// (hidden, target, negatives) example. `outputs` gradient rows follow the
// order target, negatives...
struct NsGradients {
  double loss = 0.0;
  std::vector<double> hidden;
  std::vector<double> outputs;
};

NsGradients negative_sampling_gradients(std::span<const double> hidden, const Matrix& outputs,
                                        std::uint32_t target, std::span<const std::uint32_t> negatives);

struct DmGradients {
  double loss = 0.0;
  std::vector<double> doc;
  std::vector<double> context;  // one dim-sized block per context id
  std::vector<double> outputs;
};

// PV-DM step. With Concatenate, `context` must hold exactly `window` ids
// (padding uses the last row of `words`); with Average it lists the real
// context words only.
DmGradients pvdm_gradients(std::span<const double> doc, const Matrix& words, std::span<const std::uint32_t> context,
                           PvComposition composition, const Matrix& outputs, std::uint32_t target,
                           std::span<const std::uint32_t> negatives);

class ParagraphVectorModel {
public:
  ParagraphVectorModel() = default;

  PvMode mode() const noexcept { return mode_; }
  const PvHyperparameters& hyperparameters() const noexcept { return hp_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::optional<std::uint32_t> index_of(std::string_view token) const;

  // dim for single modes, 2*dim for Merged.
  std::size_t output_dimension() const noexcept;
  std::size_t document_count() const noexcept;
  // Trained vector of training document `doc` (Merged: PV-DM then PV-DBOW).
  FeatureVector document_vector(std::size_t doc) const;

  const std::optional<PvNetwork>& dm() const noexcept { return dm_; }
  const std::optional<PvNetwork>& dbow() const noexcept { return dbow_; }

  // The PV-DM or PV-DBOW half of a Merged model, as a standalone model.
  ParagraphVectorModel extract(PvMode mode) const;

  std::vector<std::uint32_t> encode(const std::vector<std::string>& tokens) const;
  std::uint32_t sample_noise(double u) const;

  bool operator==(const ParagraphVectorModel& other) const;

private:
  friend class PvTrainer;
  friend ParagraphVectorModel parse_pv(std::string_view contents);
  friend ParagraphVectorModel pv_train(const TokenizedCorpus& corpus, PvMode mode, const PvHyperparameters& hp,
                                       std::uint64_t seed, struct PvTrainingStats* stats);

  void build_index();

  PvMode mode_ = PvMode::PVDBOW;
  PvHyperparameters hp_;
  std::uint64_t seed_ = 0;
  std::vector<std::string> vocabulary_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<double> noise_cdf_;
  std::optional<PvNetwork> dm_;
  std::optional<PvNetwork> dbow_;
};

struct PvTrainingStats {
  // Mean per-example loss over the corpus, using a fixed set of negatives.
  double initial_loss = 0.0;
  std::vector<double> epoch_loss;
};

ParagraphVectorModel pv_train(const TokenizedCorpus& corpus, PvMode mode, const PvHyperparameters& hp,
                              std::uint64_t seed, PvTrainingStats* stats = nullptr);

// Fits a fresh document vector for `steps` passes with all word and output
// vectors frozen. Out-of-vocabulary tokens are skipped.
FeatureVector pv_infer(const ParagraphVectorModel& model, const std::vector<std::string>& tokens, std::size_t steps,
                       std::uint64_t seed);

inline constexpr std::string_view kPvHeader = "sentialg-pv v1";

std::string serialize_pv(const ParagraphVectorModel& model);
ParagraphVectorModel parse_pv(std::string_view contents);
void save_pv(const ParagraphVectorModel& model, const std::filesystem::path& path);
ParagraphVectorModel load_pv(const std::filesystem::path& path);

}  // namespace sentialg
