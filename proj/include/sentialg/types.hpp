#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sentialg {

enum class Script { Arabic, Arabizi, Mixed };

enum class Label { Positive, Negative, Unlabeled };

std::string_view to_string(Script script);
std::string_view to_string(Label label);

std::optional<Script> parse_script(std::string_view text);
std::optional<Label> parse_label(std::string_view text);

// +1 for Positive, -1 for Negative, 0 for Unlabeled.
inline int sign_of(Label label) {
  switch (label) {
    case Label::Positive: return 1;
    case Label::Negative: return -1;
    default: return 0;
  }
}

// Sign function of a message score; zero is Unlabeled.
inline Label label_for_score(double score) {
  if (score > 0) return Label::Positive;
  if (score < 0) return Label::Negative;
  return Label::Unlabeled;
}

}  // namespace sentialg
