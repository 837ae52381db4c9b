// Copyright 2026 The Chronoglot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chronoglot/relevance.h"

#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace chronoglot {
namespace {

using testing::FixtureEvent;
using testing::OracleScore;

const Language kEn = Language::Of("en");
const Language kDe = Language::Of("de");

Candidate MakeCandidate(const std::string &id, std::map<Language, RawCounts> counts,
                        std::optional<Date> begin = Date{2016, 1, 1}) {
  Candidate candidate;
  candidate.id = id;
  if (begin) candidate.time_span = TimeSpan{*begin, std::nullopt};
  candidate.counts = std::move(counts);
  return candidate;
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Normalize(16, 16, 0.25), 1.0);
  EXPECT_EQ(Normalize(1, 16, 0.25), 0.5);
  EXPECT_EQ(Normalize(5, 0, 0.25), 0.0);
  EXPECT_EQ(Normalize(0, 16, 0.25), 0.0);
  EXPECT_DOUBLE_EQ(Normalize(1, 4, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(Normalize(1, 81, 0.25), 1.0 / 3.0);
}

TEST(ScoringConfigTest, DefaultsAndBounds) {
  ScoringConfig config;
  EXPECT_EQ(config.alpha, 0.25);
  EXPECT_EQ(config.w, 1.0 / 3.0);
  EXPECT_NO_THROW(config.Validate());
  EXPECT_THROW((ScoringConfig{0.0, 0.5}).Validate(), std::invalid_argument);
  EXPECT_THROW((ScoringConfig{1.5, 0.5}).Validate(), std::invalid_argument);
  EXPECT_THROW((ScoringConfig{0.5, -0.1}).Validate(), std::invalid_argument);
  EXPECT_NO_THROW((ScoringConfig{1.0, 1.0}).Validate());
}

TEST(CriterionTest, Names) {
  EXPECT_EQ(ParseCriterion("popularity"), RankingCriterion::kPopularity);
  EXPECT_EQ(ParseCriterion("relationStrength"), RankingCriterion::kRelationStrength);
  EXPECT_EQ(ParseCriterion("relation_strength"), RankingCriterion::kRelationStrength);
  EXPECT_EQ(ParseCriterion("combined"), RankingCriterion::kCombined);
  EXPECT_EQ(ParseCriterion("rc3"), std::nullopt);
  EXPECT_EQ(CriterionName(RankingCriterion::kRelationStrength), "relation_strength");
}

TEST(PopularityTest, Examples) {
  ScoringConfig config;
  CandidateSet set;
  set.events = {MakeCandidate("a", {{kEn, {16, 0, 0}}}), MakeCandidate("b", {{kEn, {1, 0, 0}}})};
  EXPECT_EQ(Popularity(set.events[0], kEn, set, config), 1.0);
  EXPECT_EQ(Popularity(set.events[1], kEn, set, config), 0.5);
  // No links at all in de.
  EXPECT_EQ(Popularity(set.events[0], kDe, set, config), 0.0);
  EXPECT_EQ(Popularity(set.events[1], kDe, set, config), 0.0);
}

TEST(RelationStrengthTest, Examples) {
  ScoringConfig config;
  CandidateSet set;
  set.events = {MakeCandidate("max", {{kEn, {0, 16, 81}}}),
                MakeCandidate("low", {{kEn, {0, 1, 1}}}),
                MakeCandidate("zero", {{kEn, {0, 0, 0}}})};
  EXPECT_EQ(RelationStrength(set.events[0], kEn, set, config), 1.0);
  // 1/2 * (1/16)^(1/4) + 1/2 * (1/81)^(1/4) = 1/4 + 1/6.
  EXPECT_NEAR(RelationStrength(set.events[1], kEn, set, config), 5.0 / 12.0, 1e-15);
  EXPECT_EQ(RelationStrength(set.events[2], kEn, set, config), 0.0);
}

TEST(CombinedTest, Examples) {
  ScoringConfig config;
  CandidateSet set;
  set.events = {MakeCandidate("top", {{kEn, {16, 4, 4}}}),
                MakeCandidate("half", {{kEn, {1, 4, 4}}}),
                MakeCandidate("none", {{kEn, {0, 0, 0}}})};
  EXPECT_EQ(Combined(set.events[0], kEn, set, config), 1.0);
  // popularity 0.5, relation strength 1: 1/6 + 2/3.
  EXPECT_NEAR(Combined(set.events[1], kEn, set, config), 5.0 / 6.0, 1e-15);
  EXPECT_EQ(Combined(set.events[2], kEn, set, config), 0.0);
}

TEST(ScoreTableTest, TwoByTwoMatchesOracle) {
  std::vector<FixtureEvent> table = {
      {"a", "2016-01-01", {{"en", {10, 3, 7}}, {"de", {2, 9, 0}}}},
      {"b", "2016-01-01", {{"en", {4, 6, 1}}, {"de", {8, 1, 5}}}},
  };
  CandidateSet set;
  for (const auto &event : table) {
    std::map<Language, RawCounts> counts;
    for (const auto &[lang, c] : event.counts) counts[Language::Of(lang)] = {c[0], c[1], c[2]};
    set.events.push_back(MakeCandidate(event.id, counts));
  }
  ScoringConfig config;
  ScoreTable scores = BuildScoreTable(set, {kEn, kDe}, RankingCriterion::kCombined, config);
  int checked = 0;
  for (const auto &event : table) {
    for (const char *lang : {"en", "de"}) {
      auto oracle = OracleScore(table, event.id, lang, config.alpha, config.w);
      const LanguageScore *score = scores.Find(event.id, Language::Of(lang));
      ASSERT_NE(score, nullptr);
      EXPECT_NEAR(score->popularity, oracle.popularity, 1e-9);
      EXPECT_NEAR(score->relation_strength, oracle.relation_strength, 1e-9);
      EXPECT_NEAR(score->combined, oracle.combined, 1e-9);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 4);
}

TEST(ScoreTableTest, SingleCandidate) {
  CandidateSet set;
  set.events = {MakeCandidate("only", {{kEn, {5, 0, 2}}, {kDe, {0, 1, 0}}})};
  ScoreTable table =
      BuildScoreTable(set, {kEn, kDe}, RankingCriterion::kPopularity, ScoringConfig());
  EXPECT_EQ(table.RankedIn(kEn).front(), 0u);
  EXPECT_EQ(table.RankedIn(kDe).front(), 0u);
  EXPECT_EQ(table.Find("only", kEn)->popularity, 1.0);
  EXPECT_EQ(table.Find("only", kDe)->popularity, 0.0);
}

TEST(ScoreTableTest, TieBreakByBeginDateThenId) {
  CandidateSet set;
  set.events = {MakeCandidate("a_later", {{kEn, {5, 5, 5}}}, Date{2016, 1, 1}),
                MakeCandidate("b_earlier", {{kEn, {5, 5, 5}}}, Date{2015, 1, 1}),
                MakeCandidate("c_earlier", {{kEn, {5, 5, 5}}}, Date{2015, 1, 1}),
                MakeCandidate("d_undated", {{kEn, {5, 5, 5}}}, std::nullopt)};
  ScoreTable table = BuildScoreTable(set, {kEn}, RankingCriterion::kCombined, ScoringConfig());
  std::vector<std::string> order;
  for (size_t index : table.RankedIn(kEn)) order.push_back(table.events()[index]);
  EXPECT_EQ(order, (std::vector<std::string>{"b_earlier", "c_earlier", "a_later", "d_undated"}));
}

TEST(ScoreTableTest, EmptyCandidates) {
  ScoreTable table =
      BuildScoreTable(CandidateSet(), {kEn}, RankingCriterion::kCombined, ScoringConfig());
  EXPECT_TRUE(table.empty());
  EXPECT_TRUE(table.RankedIn(kEn).empty());
  EXPECT_TRUE(TopKUnion(table, 3).empty());
}

CandidateSet RankedFixture(const std::map<Language, std::vector<std::string>> &orders) {
  // Assigns descending link counts following each language's order.
  std::map<std::string, std::map<Language, RawCounts>> counts;
  for (const auto &[language, ids] : orders) {
    uint64_t links = 100;
    for (const std::string &id : ids) counts[id][language].links = links--;
  }
  CandidateSet set;
  for (auto &[id, by_language] : counts) set.events.push_back(MakeCandidate(id, by_language));
  return set;
}

std::vector<std::string> Ids(const std::vector<SelectedEvent> &selected) {
  std::vector<std::string> ids;
  for (const auto &event : selected) ids.push_back(event.id);
  return ids;
}

TEST(TopKUnionTest, Examples) {
  ScoringConfig config;
  auto crossed = RankedFixture({{kEn, {"e1", "e2"}}, {kDe, {"e2", "e1"}}});
  auto table = BuildScoreTable(crossed, {kEn, kDe}, RankingCriterion::kPopularity, config);
  auto selected = TopKUnion(table, 1);
  EXPECT_EQ(Ids(selected), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(selected[0].ranks, (std::map<Language, size_t>{{kEn, 1}}));
  EXPECT_EQ(selected[1].ranks, (std::map<Language, size_t>{{kDe, 1}}));

  auto same = RankedFixture({{kEn, {"e1", "e2", "e3"}}, {kDe, {"e1", "e2", "e3"}}});
  table = BuildScoreTable(same, {kEn, kDe}, RankingCriterion::kPopularity, config);
  EXPECT_EQ(Ids(TopKUnion(table, 2)), (std::vector<std::string>{"e1", "e2"}));

  auto five = RankedFixture({{kEn, {"a", "b", "c", "d", "e"}}});
  table = BuildScoreTable(five, {kEn}, RankingCriterion::kPopularity, config);
  EXPECT_EQ(TopKUnion(table, 8).size(), 5u);
  EXPECT_THROW(TopKUnion(table, 0), std::invalid_argument);
}

// Random candidate sets of up to 20 events in three languages.
struct RandomSet {
  std::vector<FixtureEvent> table;
  CandidateSet set;
};

RandomSet MakeRandomSet(std::mt19937 &rng) {
  RandomSet random;
  size_t n = 1 + rng() % 20;
  for (size_t i = 0; i < n; ++i) {
    FixtureEvent event;
    event.id = "e" + std::to_string(100 + i);
    event.begin = "2016-01-01";
    std::map<Language, RawCounts> counts;
    for (const char *lang : {"en", "de", "ru"}) {
      // Zeros are frequent to exercise degenerate maxima.
      auto draw = [&] { return rng() % 3 == 0 ? 0u : static_cast<uint64_t>(rng() % 5000); };
      std::array<uint64_t, 3> c{draw(), draw(), draw()};
      event.counts[lang] = c;
      counts[Language::Of(lang)] = {c[0], c[1], c[2]};
    }
    random.set.events.push_back(
        MakeCandidate(event.id, counts, Date{2010 + static_cast<int>(rng() % 10), 1, 1}));
    random.table.push_back(std::move(event));
  }
  return random;
}

TEST(ScoreTablePropertyTest, OracleEquivalenceRangeConsistency) {
  std::mt19937 rng(2024);
  const std::vector<Language> languages = {kEn, kDe, Language::Of("ru")};
  for (int trial = 0; trial < 200; ++trial) {
    RandomSet random = MakeRandomSet(rng);
    ScoringConfig config{0.05 + 0.95 * (rng() % 1000) / 999.0, (rng() % 1001) / 1000.0};
    ScoreTable table =
        BuildScoreTable(random.set, languages, RankingCriterion::kCombined, config);
    for (Language language : languages) {
      bool any_popularity_one = false, any_pair_one = false, any_mentions_one = false;
      RawCounts maxima = MaximaIn(random.set, language);
      for (const LanguageScore &score : table.ScoresIn(language)) {
        auto oracle = OracleScore(random.table, score.event_id, language.code(), config.alpha,
                                  config.w);
        ASSERT_NEAR(score.popularity, oracle.popularity, 1e-9);
        ASSERT_NEAR(score.relation_strength, oracle.relation_strength, 1e-9);
        ASSERT_NEAR(score.combined, oracle.combined, 1e-9);
        for (double value : {score.popularity, score.relation_strength, score.combined}) {
          EXPECT_GE(value, 0.0);
          EXPECT_LE(value, 1.0);
        }
        EXPECT_NEAR(score.combined,
                    config.w * score.popularity + (1 - config.w) * score.relation_strength,
                    1e-12);
        EXPECT_EQ(score.maxima, maxima);
        any_popularity_one |= score.popularity == 1.0;
        any_pair_one |= Normalize(score.counts.pair, maxima.pair, config.alpha) == 1.0;
        any_mentions_one |= Normalize(score.counts.mentions, maxima.mentions, config.alpha) == 1.0;
      }
      EXPECT_EQ(any_popularity_one, maxima.links > 0);
      EXPECT_EQ(any_pair_one, maxima.pair > 0);
      EXPECT_EQ(any_mentions_one, maxima.mentions > 0);
    }
  }
}

TEST(ScoreTablePropertyTest, MonotoneInEachCount) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    RawCounts maxima{1 + rng() % 1000, 1 + rng() % 1000, 1 + rng() % 1000};
    RawCounts low{rng() % (maxima.links + 1), rng() % (maxima.pair + 1),
                  rng() % (maxima.mentions + 1)};
    RawCounts high = low;
    switch (rng() % 3) {
      case 0: high.links += rng() % (maxima.links - low.links + 1); break;
      case 1: high.pair += rng() % (maxima.pair - low.pair + 1); break;
      default: high.mentions += rng() % (maxima.mentions - low.mentions + 1); break;
    }
    ScoringConfig config;
    LanguageScore a = ScoreCounts(low, maxima, config);
    LanguageScore b = ScoreCounts(high, maxima, config);
    EXPECT_LE(a.popularity, b.popularity);
    EXPECT_LE(a.relation_strength, b.relation_strength);
    EXPECT_LE(a.combined, b.combined);
  }
}

TEST(ScoreTablePropertyTest, RankingScaleInvariance) {
  std::mt19937 rng(5);
  const std::vector<Language> languages = {kEn, kDe, Language::Of("ru")};
  for (int trial = 0; trial < 100; ++trial) {
    RandomSet random = MakeRandomSet(rng);
    uint64_t factor = 2 + rng() % 50;
    int which = static_cast<int>(rng() % 3);
    CandidateSet scaled = random.set;
    for (Candidate &candidate : scaled.events) {
      RawCounts &c = candidate.counts[kDe];
      (which == 0 ? c.links : which == 1 ? c.pair : c.mentions) *= factor;
    }
    for (RankingCriterion criterion :
         {RankingCriterion::kPopularity, RankingCriterion::kRelationStrength,
          RankingCriterion::kCombined}) {
      ScoringConfig config;
      auto before = BuildScoreTable(random.set, languages, criterion, config);
      auto after = BuildScoreTable(scaled, languages, criterion, config);
      for (Language language : languages) {
        EXPECT_EQ(before.RankedIn(language), after.RankedIn(language));
      }
    }
  }
}

}  // namespace
}  // namespace chronoglot
