#include "sentialg/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

std::string_view to_string(SplitPart part) {
  switch (part) {
    case SplitPart::Train: return "train";
    case SplitPart::Dev: return "dev";
    case SplitPart::Test: return "test";
  }
  return "train";
}

std::optional<SplitPart> parse_split_part(std::string_view text) {
  if (text == "train") return SplitPart::Train;
  if (text == "dev") return SplitPart::Dev;
  if (text == "test") return SplitPart::Test;
  return std::nullopt;
}

void SplitSpec::validate() const {
  for (double r : {train, dev, test}) {
    if (!(r >= 0.0 && r < 1.0)) throw InvalidHyperparameter("split ratios must lie in [0, 1)");
  }
  if (train <= 0.0) throw InvalidHyperparameter("train ratio must be positive");
  if (std::abs(train + dev + test - 1.0) > 1e-9) throw InvalidHyperparameter("split ratios must sum to 1");
}

namespace {

std::array<std::size_t, 3> allocate(std::size_t n, const SplitSpec& spec) {
  const std::array<double, 3> ratios{spec.train, spec.dev, spec.test};
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = ratios[i] * static_cast<double>(n);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainders[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  // Hand leftovers to the largest fractional parts; ties go to the earlier part.
  while (assigned < n) {
    int best = -1;
    for (int i = 0; i < 3; ++i) {
      if (ratios[i] <= 0.0) continue;
      if (best < 0 || remainders[i] > remainders[best]) best = i;
    }
    counts[best]++;
    remainders[best] = -1.0;
    ++assigned;
  }
  return counts;
}

}  // namespace

std::vector<SplitPart> assign_split(const std::vector<LabeledText>& items, const SplitSpec& spec) {
  spec.validate();
  std::map<std::pair<Script, Label>, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < items.size(); ++i) strata[{items[i].script, items[i].label}].push_back(i);

  std::vector<SplitPart> assignment(items.size(), SplitPart::Train);
  for (auto& [key, indices] : strata) {
    const std::string name = std::string(to_string(key.first)) + "/" + std::string(to_string(key.second));
    if (indices.size() < spec.min_stratum) throw StratumTooSmall(name, indices.size(), spec.min_stratum);
    Rng rng(derive_seed(spec.seed, name));
    rng.shuffle(indices);
    auto counts = allocate(indices.size(), spec);
    std::size_t pos = 0;
    for (int part = 0; part < 3; ++part) {
      for (std::size_t k = 0; k < counts[part]; ++k) assignment[indices[pos++]] = static_cast<SplitPart>(part);
    }
  }

  return assignment;
}

DatasetSplits split(const std::vector<LabeledText>& items, const SplitSpec& spec) {
  const auto assignment = assign_split(items, spec);
  DatasetSplits out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    LabeledText item = items[i];
    item.part = assignment[i];
    switch (assignment[i]) {
      case SplitPart::Train: out.train.push_back(std::move(item)); break;
      case SplitPart::Dev: out.dev.push_back(std::move(item)); break;
      case SplitPart::Test: out.test.push_back(std::move(item)); break;
    }
  }
  return out;
}

DatasetSplits group_by_part(const std::vector<LabeledText>& items) {
  DatasetSplits out;
  for (const auto& item : items) {
    if (!item.part) throw Error("item '" + item.id + "' carries no split tag");
    switch (*item.part) {
      case SplitPart::Train: out.train.push_back(item); break;
      case SplitPart::Dev: out.dev.push_back(item); break;
      case SplitPart::Test: out.test.push_back(item); break;
    }
  }
  return out;
}

}  // namespace sentialg
