#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"
#include "sentialg/split.hpp"

namespace sentialg {
namespace {

std::vector<LabeledText> items(std::size_t per_stratum_pos, std::size_t per_stratum_neg, bool both_scripts) {
  std::vector<LabeledText> out;
  int id = 0;
  for (Script script : {Script::Arabizi, Script::Arabic}) {
    if (script == Script::Arabic && !both_scripts) break;
    for (std::size_t i = 0; i < per_stratum_pos; ++i) out.push_back({std::to_string(id++), "t", script, Label::Positive, {}});
    for (std::size_t i = 0; i < per_stratum_neg; ++i) out.push_back({std::to_string(id++), "t", script, Label::Negative, {}});
  }
  return out;
}

TEST(Split, EightyTenTen) {
  auto data = items(50, 50, false);
  SplitSpec spec;
  auto s = split(data, spec);
  EXPECT_EQ(s.train.size(), 80u);
  EXPECT_EQ(s.dev.size(), 10u);
  EXPECT_EQ(s.test.size(), 10u);
  std::map<Label, int> test_labels;
  for (const auto& item : s.test) test_labels[item.label]++;
  EXPECT_EQ(test_labels[Label::Positive], 5);
  EXPECT_EQ(test_labels[Label::Negative], 5);
}

TEST(Split, DeterministicPerSeed) {
  auto data = items(30, 40, true);
  SplitSpec spec;
  spec.seed = 12;
  EXPECT_EQ(assign_split(data, spec), assign_split(data, spec));
  auto other = spec;
  other.seed = 13;
  EXPECT_NE(assign_split(data, spec), assign_split(data, other));
}

TEST(Split, ZeroTestRatioAllowed) {
  SplitSpec spec;
  spec.train = 0.5;
  spec.dev = 0.5;
  spec.test = 0.0;
  auto s = split(items(21, 13, true), spec);
  EXPECT_TRUE(s.test.empty());
  EXPECT_EQ(s.train.size() + s.dev.size(), 68u);
}

TEST(Split, PartitionAndProportionProperties) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto data = items(10 + rng.index(60), 10 + rng.index(60), rng.index(2) == 0);
    SplitSpec spec;
    spec.train = 0.1 + 0.8 * rng.uniform();
    spec.dev = (1.0 - spec.train) * rng.uniform();
    spec.test = 1.0 - spec.train - spec.dev;
    spec.seed = rng.next();
    if (spec.test < 0.0 || spec.test >= 1.0) continue;
    const auto s = split(data, spec);
    std::set<std::string> seen;
    for (const auto* part : {&s.train, &s.dev, &s.test}) {
      for (const auto& item : *part) ASSERT_TRUE(seen.insert(item.id).second);
    }
    ASSERT_EQ(seen.size(), data.size());
    std::map<std::pair<Script, Label>, std::array<double, 4>> strata;
    for (const auto& item : data) strata[{item.script, item.label}][3] += 1;
    for (int p = 0; p < 3; ++p) {
      const auto& part = p == 0 ? s.train : p == 1 ? s.dev : s.test;
      for (const auto& item : part) strata[{item.script, item.label}][p] += 1;
    }
    const double ratios[3] = {spec.train, spec.dev, spec.test};
    for (const auto& [key, c] : strata) {
      for (int p = 0; p < 3; ++p) ASSERT_LT(std::abs(c[p] - ratios[p] * c[3]), 1.0);
    }
  }
}

TEST(Split, SmallStratumRejected) {
  EXPECT_THROW(split(items(9, 20, false), SplitSpec{}), StratumTooSmall);
}

TEST(Split, InvalidRatiosRejected) {
  SplitSpec spec;
  spec.train = 0.9;
  EXPECT_THROW(spec.validate(), InvalidHyperparameter);
  spec.train = 0.0;
  spec.dev = 0.5;
  spec.test = 0.5;
  EXPECT_THROW(spec.validate(), InvalidHyperparameter);
}

TEST(Split, GroupByPartUsesTags) {
  auto data = items(10, 10, false);
  for (std::size_t i = 0; i < data.size(); ++i) data[i].part = i < 15 ? SplitPart::Train : SplitPart::Test;
  auto g = group_by_part(data);
  EXPECT_EQ(g.train.size(), 15u);
  EXPECT_EQ(g.test.size(), 5u);
  data[0].part.reset();
  EXPECT_THROW(group_by_part(data), Error);
}

}  // namespace
}  // namespace sentialg
