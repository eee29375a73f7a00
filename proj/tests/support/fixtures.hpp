#pragma once

// Synthetic data shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "sentialg/classifiers.hpp"
#include "sentialg/common.hpp"
#include "sentialg/lexicon.hpp"
#include "sentialg/normalizer.hpp"
#include "sentialg/split.hpp"
#include "sentialg/translation.hpp"

namespace sentialg::testing {

struct SeedTable {
  std::set<SeedEntry> seed;
  std::set<TranslationRecord> table;
};

// Up to `max_terms` English terms, some untranslated, and dialect terms drawn
// from small pools in both scripts so that many English terms collide.
SeedTable random_seed_table(Rng& rng, std::size_t max_terms = 50);

// Lexicon built from the words of the two annotation examples:
// love -> حب / hab, man -> rajel, cry -> بكى.
SentimentLexicon example_lexicon();

struct ToyTerm {
  std::string term;
  Script script;
  int score;
};

// 60 terms: 15 positive and 15 negative per script.
std::vector<ToyTerm> toy_terms();
SentimentLexicon toy_lexicon();

// Messages built from toy terms of one polarity plus neutral filler, half in
// each script. `labels` holds the intended polarity of each message.
struct SyntheticCorpus {
  std::vector<Message> messages;
  std::vector<Label> labels;
  std::vector<Script> scripts;
};
SyntheticCorpus synthetic_corpus(std::size_t n, std::uint64_t seed, const std::string& id_prefix = "m");

// Gold labeled items from a synthetic corpus (normalized text).
std::vector<LabeledText> gold_items(const SyntheticCorpus& corpus);

// Two Gaussian clusters in `dim` dimensions, labeled by the side of the
// hyperplane sum(x) = 0, with points inside the margin rejected.
LabeledDataset separable_fixture(std::size_t n, std::size_t dim, std::uint64_t seed);

// Sparse nonnegative count data with class-specific features.
LabeledDataset sparse_count_fixture(std::size_t n, std::size_t dim, std::uint64_t seed);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

}  // namespace sentialg::testing
