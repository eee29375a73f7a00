#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentialg/lexicon.hpp"
#include "sentialg/types.hpp"

namespace sentialg {

struct ScriptAffixes {
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  std::vector<std::string> past_suffixes;
  std::string past_restoration;  // appended after a past-tense suffix is stripped

  bool operator==(const ScriptAffixes&) const = default;
};

// Affix inventories per script. Lists are kept sorted by descending length
// (ties in file order) so the first match is the longest one.
struct AffixConfig {
  ScriptAffixes arabic;
  ScriptAffixes arabizi;
  std::size_t min_stem_length = 2;

  const ScriptAffixes& for_script(Script script) const {
    return script == Script::Arabic ? arabic : arabizi;
  }
  // Sorts lists and checks invariants; throws InvalidHyperparameter.
  void validate_and_sort();

  bool operator==(const AffixConfig&) const = default;
};

AffixConfig default_affix_config();

// Sections `[arabic.prefixes]`, `[arabic.suffixes]`, `[arabic.past_suffixes]`,
// `[arabic.past_restoration]` (and the arabizi equivalents) list one affix
// per line; `[options]` accepts `min_stem_length = N`.
AffixConfig parse_affix_config(std::string_view contents);
AffixConfig load_affix_config(const std::filesystem::path& path);
std::string serialize_affix_config(const AffixConfig& config);

// Candidate stems in priority order: the token, minus prefix, minus suffix,
// minus both, then the past-tense restorations of each.
std::vector<std::string> stem_candidates(std::string_view token, const AffixConfig& config);

struct StemMatch {
  std::string matched_form;
  double score = 0.0;
};

std::optional<StemMatch> lookup_with_stemming(std::string_view token, const SentimentLexicon& lexicon,
                                              const AffixConfig& config);

}  // namespace sentialg
