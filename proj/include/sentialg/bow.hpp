#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentialg/features.hpp"

namespace sentialg {

enum class BowWeighting { Count, Presence };

using TokenizedCorpus = std::vector<std::vector<std::string>>;

class BowModel {
public:
  BowModel() = default;
  BowModel(std::vector<std::string> vocabulary, std::size_t min_count, BowWeighting weighting);

  // Column index of `token`, if in the vocabulary.
  std::optional<std::size_t> index_of(std::string_view token) const;

  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  std::size_t dimension() const noexcept { return vocabulary_.size(); }
  std::size_t min_count() const noexcept { return min_count_; }
  BowWeighting weighting() const noexcept { return weighting_; }

  bool operator==(const BowModel& other) const {
    return vocabulary_ == other.vocabulary_ && min_count_ == other.min_count_ && weighting_ == other.weighting_;
  }

private:
  std::vector<std::string> vocabulary_;  // sorted; position is the column
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t min_count_ = 1;
  BowWeighting weighting_ = BowWeighting::Count;
};

// Vocabulary of tokens seen at least `min_count` times, indexed in
// lexicographic order.
BowModel bow_fit(const TokenizedCorpus& corpus, std::size_t min_count = 1,
                 BowWeighting weighting = BowWeighting::Count);

// Out-of-vocabulary tokens are ignored.
FeatureVector bow_transform(const BowModel& model, const std::vector<std::string>& tokens);

inline constexpr std::string_view kBowHeader = "sentialg-bow v1";

std::string serialize_bow(const BowModel& model);
BowModel parse_bow(std::string_view contents);
void save_bow(const BowModel& model, const std::filesystem::path& path);
BowModel load_bow(const std::filesystem::path& path);

}  // namespace sentialg
