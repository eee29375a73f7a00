#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sentialg/lexicon.hpp"
#include "sentialg/normalizer.hpp"
#include "sentialg/split.hpp"
#include "sentialg/stemmer.hpp"

namespace sentialg {

enum class NegationScope { ToEnd, ToPunctuation };

struct NegationMarkers {
  std::set<std::string> standalone;
  std::vector<std::string> prefixes;  // longest first
  std::vector<std::string> suffixes;  // longest first

  bool operator==(const NegationMarkers&) const = default;
};

struct NegationConfig {
  NegationMarkers arabic;
  NegationMarkers arabizi;
  NegationScope scope = NegationScope::ToEnd;

  const NegationMarkers& for_script(Script script) const {
    return script == Script::Arabic ? arabic : arabizi;
  }
  void validate_and_sort();

  bool operator==(const NegationConfig&) const = default;
};

NegationConfig default_negation_config();

// Sections `[arabic.standalone]`, `[arabic.prefixes]`, `[arabic.suffixes]`,
// the arabizi equivalents, and `[options]` with `scope = to_end|to_punctuation`.
NegationConfig parse_negation_config(std::string_view contents);
NegationConfig load_negation_config(const std::filesystem::path& path);

struct NegationResult {
  bool is_negator = false;
  // Set when a circumfix (e.g. ma...ch) was stripped from a content word.
  std::optional<std::string> residual;

  bool operator==(const NegationResult&) const = default;
};

NegationResult detect_negation(std::string_view token, const NegationConfig& config);

struct MatchSpan {
  std::string ngram;    // surface tokens as they appear in the message
  std::string matched;  // lexicon form that was found
  double raw = 0.0;
  bool negated = false;
  double applied = 0.0;
  std::size_t start = 0;
  std::size_t length = 0;

  bool operator==(const MatchSpan&) const = default;
};

struct MatchTrace {
  std::vector<MatchSpan> spans;
  // Negator tokens that also have a lexicon entry; treated as negators.
  std::vector<std::string> negator_conflicts;

  bool operator==(const MatchTrace&) const = default;
};

struct ScoreResult {
  double score = 0.0;
  MatchTrace trace;
};

struct AnnotatorConfig {
  AffixConfig affixes = default_affix_config();
  NegationConfig negation = default_negation_config();
  NormalizerOptions normalizer;
  std::size_t max_n = 3;
};

// Greedy longest-match-first, left to right, non-overlapping. Single tokens
// that miss fall back to stem lookup. Each negator toggles a sign applied to
// every later match within scope.
ScoreResult score_message(const TokenSequence& tokens, const SentimentLexicon& lexicon,
                          const AnnotatorConfig& config);

struct AnnotatedMessage {
  Message message;
  std::string normalized;
  Script script = Script::Arabizi;
  double score = 0.0;
  Label label = Label::Unlabeled;
  MatchTrace trace;

  bool operator==(const AnnotatedMessage&) const = default;
};

AnnotatedMessage annotate_message(const Message& message, const SentimentLexicon& lexicon,
                                  const AnnotatorConfig& config);

struct AnnotationSummary {
  // [script][label], indexed by the enum values.
  std::array<std::array<std::size_t, 3>, 3> counts{};

  std::size_t total() const;
  std::size_t count(Script script, Label label) const {
    return counts[static_cast<int>(script)][static_cast<int>(label)];
  }
};

// Output order matches input order regardless of `jobs`.
std::vector<AnnotatedMessage> annotate_corpus(const std::vector<Message>& corpus,
                                              const SentimentLexicon& lexicon,
                                              const AnnotatorConfig& config, unsigned jobs = 1,
                                              AnnotationSummary* summary = nullptr);

LabeledText to_labeled_text(const AnnotatedMessage& annotated);

// Draws `per_cell` messages uniformly without replacement from each of the
// four (script, label) cells, Arabic/Arabizi x Positive/Negative. When a split
// spec is given every sampled message is tagged train/dev/test. Output is in
// corpus order.
std::vector<LabeledText> build_balanced_training_set(const std::vector<AnnotatedMessage>& annotated,
                                                     std::size_t per_cell, std::uint64_t seed,
                                                     const std::optional<SplitSpec>& split_spec = {});

}  // namespace sentialg
