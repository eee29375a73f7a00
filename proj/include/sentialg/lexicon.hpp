#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentialg/translation.hpp"
#include "sentialg/types.hpp"

namespace sentialg {

// An English pivot term with integer valence in [-5,-1] or [+1,+5].
struct SeedEntry {
  std::string term;
  int score = 0;

  auto operator<=>(const SeedEntry&) const = default;
};

std::set<SeedEntry> parse_seed_lexicon(std::string_view contents);
std::set<SeedEntry> load_seed_lexicon(const std::filesystem::path& path);

// One line per term, `#` comments allowed.
std::set<std::string> load_stoplist(const std::filesystem::path& path);

struct LexiconEntry {
  std::string term;
  Script script = Script::Arabic;
  double score = 0.0;
  // (english_term, seed_score) pairs whose translations produced this term.
  std::set<std::pair<std::string, int>> sources;

  bool operator==(const LexiconEntry&) const = default;
};

struct LexiconMetadata {
  std::string seed_name;
  std::string build_timestamp;
  std::size_t arabic_count = 0;
  std::size_t arabizi_count = 0;

  bool operator==(const LexiconMetadata&) const = default;
};

class SentimentLexicon {
public:
  using Key = std::pair<std::string, Script>;

  SentimentLexicon() = default;

  // Inserts or replaces; metadata counts follow the entries.
  void insert(LexiconEntry entry);
  bool erase(const std::string& term, Script script);

  const LexiconEntry* find(std::string_view term, Script script) const;
  // Looks the term up under the script its characters imply.
  const LexiconEntry* find(std::string_view term) const;

  const std::map<Key, LexiconEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t count(Script script) const;

  LexiconMetadata& metadata() noexcept { return metadata_; }
  const LexiconMetadata& metadata() const noexcept { return metadata_; }

  // Returns a copy with every score multiplied by `factor`.
  SentimentLexicon scaled(double factor) const;

  bool operator==(const SentimentLexicon& other) const {
    return entries_ == other.entries_ && metadata_ == other.metadata_;
  }

private:
  std::map<Key, LexiconEntry> entries_;
  LexiconMetadata metadata_;
};

struct BuildOptions {
  std::string seed_name;
  std::string build_timestamp;  // recorded verbatim; never read from the clock
  std::set<std::string> stoplist;
};

struct BuildReport {
  std::size_t seed_terms = 0;
  std::size_t recognized_seed_terms = 0;
  std::size_t dropped_by_stoplist = 0;
  std::size_t arabic_entries = 0;
  std::size_t arabizi_entries = 0;
};

// Forward step: every translation of a seed term inherits the seed score.
// Inverse step: a dialect term's score is the mean over all distinct
// (english_term, score) pairs that reached it.
SentimentLexicon build_lexicon(const std::set<SeedEntry>& seed, const TranslationProvider& provider,
                               const BuildOptions& options = {}, BuildReport* report = nullptr);

inline constexpr std::string_view kLexiconHeader = "#sentialg-lexicon v1";

std::string serialize_lexicon(const SentimentLexicon& lexicon);
SentimentLexicon parse_lexicon(std::string_view contents);
void save_lexicon(const SentimentLexicon& lexicon, const std::filesystem::path& path);
SentimentLexicon load_lexicon(const std::filesystem::path& path);

}  // namespace sentialg
