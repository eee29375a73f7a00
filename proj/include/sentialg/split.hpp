#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sentialg/types.hpp"

namespace sentialg {

enum class SplitPart { Train, Dev, Test };

std::string_view to_string(SplitPart part);
std::optional<SplitPart> parse_split_part(std::string_view text);

// A labeled, normalized message as consumed by vectorizers and classifiers.
struct LabeledText {
  std::string id;
  std::string text;
  Script script = Script::Arabizi;
  Label label = Label::Unlabeled;
  std::optional<SplitPart> part;

  bool operator==(const LabeledText&) const = default;
};

struct SplitSpec {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;
  std::size_t min_stratum = 10;

  // Ratios must lie in [0,1), train > 0, and sum to 1.
  void validate() const;
};

struct DatasetSplits {
  std::vector<LabeledText> train;
  std::vector<LabeledText> dev;
  std::vector<LabeledText> test;
};

// Stratified by (label, script). Within each stratum the counts follow the
// largest-remainder rule, so each differs from its exact share by < 1.
// Outputs keep input order and carry their `part`.
DatasetSplits split(const std::vector<LabeledText>& items, const SplitSpec& spec);

// The part chosen for each item by split(), index-aligned with `items`.
std::vector<SplitPart> assign_split(const std::vector<LabeledText>& items, const SplitSpec& spec);

// Groups items by an existing `part` tag; untagged items are an error.
DatasetSplits group_by_part(const std::vector<LabeledText>& items);

}  // namespace sentialg
