#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentialg/types.hpp"

namespace sentialg {

struct Message {
  std::string id;
  std::string text;
  std::optional<std::string> source;

  bool operator==(const Message&) const = default;
};

struct TokenSequence {
  std::vector<std::string> tokens;
  Script script = Script::Arabizi;
};

struct NormalizerOptions {
  // Runs of the same character at least this long collapse to one.
  std::size_t collapse_threshold = 3;
  bool lowercase_latin = false;
};

struct NGram {
  std::string text;
  std::size_t start = 0;
  std::size_t length = 0;

  bool operator==(const NGram&) const = default;
};

inline constexpr char32_t kTatweel = 0x0640;

// Keeps the first message for each whitespace-trimmed text, in input order.
std::vector<Message> deduplicate(const std::vector<Message>& corpus);

// Removes '#' and tatweel, collapses elongated runs, detaches `. , ! ?` from
// neighbouring words, squeezes whitespace and trims.
std::string normalize(std::string_view text, const NormalizerOptions& options = {});

// Arabic when every letter is Arabic, Mixed when both alphabets occur,
// Arabizi otherwise (including text with no letters at all).
Script detect_script(std::string_view text);

TokenSequence tokenize(std::string_view normalized_text);

// normalize() followed by tokenize().
TokenSequence prepare(std::string_view raw_text, const NormalizerOptions& options = {});

bool is_punctuation_token(std::string_view token);

// All contiguous spans of length 1..min(max_n, size), shortest first.
std::vector<NGram> ngrams(const TokenSequence& tokens, std::size_t max_n = 3);

}  // namespace sentialg
