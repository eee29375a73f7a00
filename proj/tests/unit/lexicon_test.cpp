#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sentialg/errors.hpp"
#include "sentialg/lexicon.hpp"

namespace sentialg {
namespace {

using testing::brute_force_lexicon;
using testing::random_seed_table;
using testing::ulp_distance;

SentimentLexicon build(const std::string& seed, const std::string& table, const BuildOptions& options = {},
                       BuildReport* report = nullptr) {
  return build_lexicon(parse_seed_lexicon(seed), TranslationTable::parse(table), options, report);
}

TEST(SeedLexicon, ParsesAndValidates) {
  auto seed = parse_seed_lexicon("# socal\nGood\t3\nbad\t-2\n");
  ASSERT_EQ(seed.size(), 2u);
  EXPECT_EQ(seed.begin()->term, "bad");
  EXPECT_THROW(parse_seed_lexicon("good\t0\n"), MalformedLine);
  EXPECT_THROW(parse_seed_lexicon("good\t6\n"), MalformedLine);
  EXPECT_THROW(parse_seed_lexicon("good\t2.5\n"), MalformedLine);
  EXPECT_THROW(parse_seed_lexicon("go:od\t2\n"), MalformedLine);
  EXPECT_THROW(parse_seed_lexicon("good 2\n"), MalformedLine);
}

TEST(BuildLexicon, SharedTranslationGetsMeanScore) {
  BuildReport report;
  auto lex = build("good\t3\nnice\t1\nawful\t-4\nunknown\t2\n",
                   "good\tmlih\nnice\tmlih\nawful\tkhayeb\nawful\tخايب\n", {}, &report);
  ASSERT_NE(lex.find("mlih"), nullptr);
  EXPECT_EQ(lex.find("mlih")->score, 2.0);
  EXPECT_EQ(lex.find("khayeb")->score, -4.0);
  EXPECT_EQ(lex.find("خايب", Script::Arabic)->score, -4.0);
  EXPECT_EQ(lex.find("خايب", Script::Arabizi), nullptr);
  EXPECT_EQ(report.seed_terms, 4u);
  EXPECT_EQ(report.recognized_seed_terms, 3u);
  EXPECT_EQ(report.arabic_entries, 1u);
  EXPECT_EQ(report.arabizi_entries, 2u);
  EXPECT_EQ(lex.find("mlih")->sources.size(), 2u);
}

TEST(BuildLexicon, ScoresStayWithinSeedRange) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto pair = random_seed_table(rng);
    auto lex = build_lexicon(pair.seed, TranslationTable(pair.table));
    for (const auto& [key, entry] : lex.entries()) {
      ASSERT_GE(entry.score, -5.0);
      ASSERT_LE(entry.score, 5.0);
      ASSERT_TRUE(std::isfinite(entry.score));
      ASSERT_FALSE(entry.sources.empty());
    }
  }
}

TEST(BuildLexicon, MatchesBruteForceMean) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto pair = random_seed_table(rng);
    auto lex = build_lexicon(pair.seed, TranslationTable(pair.table));
    auto oracle = brute_force_lexicon(pair.seed, pair.table);
    ASSERT_EQ(lex.size(), oracle.size());
    for (const auto& [key, score] : oracle) {
      const auto* entry = lex.find(key.first, key.second);
      ASSERT_NE(entry, nullptr);
      ASSERT_LE(ulp_distance(entry->score, score), 1u) << key.first;
    }
  }
}

TEST(BuildLexicon, StoplistRemovesExactlyOneEntry) {
  BuildOptions options;
  auto base = build("good\t3\nbad\t-3\n", "good\tmlih\nbad\tkhayeb\n", options);
  options.stoplist = {"mlih"};
  BuildReport report;
  auto filtered = build("good\t3\nbad\t-3\n", "good\tmlih\nbad\tkhayeb\n", options, &report);
  EXPECT_EQ(filtered.size(), base.size() - 1);
  EXPECT_EQ(report.dropped_by_stoplist, 1u);
}

TEST(BuildLexicon, EmptySeedThrows) {
  EXPECT_THROW(build_lexicon({}, TranslationTable()), EmptySeed);
}

TEST(BuildLexicon, UntranslatedSeedGivesEmptyLexicon) {
  auto lex = build("good\t3\n", "bad\tkhayeb\n");
  EXPECT_TRUE(lex.empty());
}

TEST(LexiconFile, RoundTripIsExact) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto pair = random_seed_table(rng);
    BuildOptions options;
    options.seed_name = "seed" + std::to_string(trial);
    options.build_timestamp = "2020-01-01T00:00:00Z";
    auto lex = build_lexicon(pair.seed, TranslationTable(pair.table), options);
    auto text = serialize_lexicon(lex);
    auto back = parse_lexicon(text);
    ASSERT_EQ(back, lex);
    ASSERT_EQ(serialize_lexicon(back), text);
  }
}

TEST(LexiconFile, DetectsTruncationAndVersion) {
  auto lex = build("good\t3\nbad\t-3\nnice\t2\n", "good\tmlih\nbad\tkhayeb\nnice\tzin\n");
  auto text = serialize_lexicon(lex);
  auto truncated = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  EXPECT_THROW(parse_lexicon(truncated), MalformedLine);
  EXPECT_THROW(parse_lexicon("#sentialg-lexicon v2\n#seed\t\n#built\t\n#counts\t0\t0\n"), FormatVersionMismatch);
}

TEST(Lexicon, ScaledMultipliesScores) {
  auto lex = testing::toy_lexicon();
  auto scaled = lex.scaled(2.5);
  for (const auto& [key, entry] : lex.entries()) {
    EXPECT_EQ(scaled.find(key.first, key.second)->score, entry.score * 2.5);
  }
}

TEST(Lexicon, InsertEraseKeepsCounts) {
  SentimentLexicon lex;
  lex.insert({"zin", Script::Arabizi, 2.0, {}});
  lex.insert({"زين", Script::Arabic, 2.0, {}});
  lex.insert({"zin", Script::Arabizi, 3.0, {}});
  EXPECT_EQ(lex.count(Script::Arabizi), 1u);
  EXPECT_EQ(lex.metadata().arabic_count, 1u);
  EXPECT_EQ(lex.find("zin")->score, 3.0);
  EXPECT_TRUE(lex.erase("zin", Script::Arabizi));
  EXPECT_FALSE(lex.erase("zin", Script::Arabizi));
  EXPECT_EQ(lex.metadata().arabizi_count, 0u);
}

}  // namespace
}  // namespace sentialg
