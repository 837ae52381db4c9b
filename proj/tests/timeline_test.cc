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

#include "chronoglot/timeline.h"

#include <random>
#include <sstream>

#include "chronoglot/timeline_json.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace chronoglot {
namespace {

using testing::DataPath;

const Language kEn = Language::Of("en");
const Language kDe = Language::Of("de");
const Language kFr = Language::Of("fr");
const Language kRu = Language::Of("ru");
const std::string kReferendum = "http://ex.org/event/referendum";

EventStore LoadStore(const char *name) {
  return EventStore::Build(LoadDumpFile(DataPath(name)));
}

TimelineQuery MiniQuery(RankingCriterion criterion) {
  TimelineQuery query;
  query.entity_label = "Brexit";
  query.languages = {kEn, kDe, kFr};
  query.k = 2;
  query.criterion = criterion;
  return query;
}

std::string DumpOf(size_t events, std::mt19937 &rng) {
  std::ostringstream out;
  const std::string g = "<http://eventKG.l3s.uni-hannover.de/graph/";
  out << "<http://ex.org/q> <http://www.w3.org/2000/01/rdf-schema#label> \"Q\"@en .\n";
  for (size_t i = 0; i < events; ++i) {
    std::string e = "<http://ex.org/e" + std::to_string(i) + ">";
    std::string r = "<http://ex.org/r" + std::to_string(i) + ">";
    std::string l = "<http://ex.org/l" + std::to_string(i) + ">";
    out << e << " <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
        << "<http://eventKG.l3s.uni-hannover.de/schema/Event> .\n";
    out << e << " <http://semanticweb.cs.vu.nl/2009/11/sem/hasBeginTimeStamp> \""
        << 2000 + rng() % 20 << "-0" << 1 + rng() % 9 << "-1" << rng() % 9 << "\" .\n";
    if (rng() % 3 == 0) {
      out << e << " <http://semanticweb.cs.vu.nl/2009/11/sem/hasEndTimeStamp> \"2020-01-01\" .\n";
    }
    out << r << " <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/q> .\n";
    out << r << " <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> " << e << " .\n";
    out << r << " <http://semanticweb.cs.vu.nl/2009/11/sem/roleType> <http://ex.org/role> .\n";
    out << l << " <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> " << e << " .\n";
    out << l << " <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/q> .\n";
    for (const char *lang : {"en", "de", "fr"}) {
      out << e << " <http://eventKG.l3s.uni-hannover.de/schema/links> \"" << rng() % 50 << "\" "
          << g << lang << "> .\n";
      out << l << " <http://eventKG.l3s.uni-hannover.de/schema/links> \"" << rng() % 50 << "\" "
          << g << lang << "> .\n";
      out << l << " <http://eventKG.l3s.uni-hannover.de/schema/mentions> \"" << rng() % 50
          << "\" " << g << lang << "> .\n";
    }
  }
  return out.str();
}

EventStore StoreFromText(const std::string &text) {
  std::istringstream in(text);
  RawGraph raw = LoadDump(in);
  EXPECT_TRUE(raw.errors.empty());
  return EventStore::Build(raw);
}

TEST(ExecuteTimelineTest, DominantEventRanksFirstEverywhere) {
  EventStore store = LoadStore("brexit_mini.nq");
  for (RankingCriterion criterion :
       {RankingCriterion::kPopularity, RankingCriterion::kRelationStrength,
        RankingCriterion::kCombined}) {
    TimelineDocument document = ExecuteTimeline(MiniQuery(criterion), store);
    const TimelineEntry *referendum = nullptr;
    double largest_other = 0;
    for (const TimelineEntry &entry : document.entries) {
      if (entry.id == kReferendum) {
        referendum = &entry;
      } else {
        largest_other = std::max(largest_other, entry.overall_relevance);
      }
    }
    ASSERT_NE(referendum, nullptr);
    for (Language language : {kEn, kDe, kFr}) {
      EXPECT_EQ(referendum->ranks.at(language), 1u) << CriterionName(criterion);
    }
    EXPECT_GT(referendum->overall_relevance, largest_other);
    // Holding every maximum, each criterion score is exactly 1.
    EXPECT_EQ(referendum->overall_relevance, 3.0);
  }
}

TEST(ExecuteTimelineTest, WindowDropsOutsideCandidates) {
  EventStore store = LoadStore("brexit_mini.nq");
  TimelineQuery query = MiniQuery(RankingCriterion::kCombined);
  query.k = 8;
  query.window = DateWindow{Date{2015, 1, 1}, Date{2018, 1, 31}};
  TimelineDocument document = ExecuteTimeline(query, store);
  for (const TimelineEntry &entry : document.entries) {
    EXPECT_NE(entry.id, "http://ex.org/event/scotland2014");
  }
  EXPECT_EQ(document.entries.size(), 4u);
  ASSERT_EQ(document.diagnostics.size(), 1u);
  EXPECT_EQ(document.diagnostics[0].kind, "outside_window");
  EXPECT_EQ(document.diagnostics[0].id, "http://ex.org/event/scotland2014");
}

TEST(ExecuteTimelineTest, UndatedCandidatesReported) {
  EventStore store = StoreFromText(
      "<http://ex.org/q> <http://www.w3.org/2000/01/rdf-schema#label> \"Q\"@en .\n"
      "<http://ex.org/e> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
      "<http://eventKG.l3s.uni-hannover.de/schema/Event> .\n"
      "<http://ex.org/r> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/q> .\n"
      "<http://ex.org/r> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/e> .\n"
      "<http://ex.org/r> <http://semanticweb.cs.vu.nl/2009/11/sem/roleType> <http://ex.org/x> .\n");
  TimelineQuery query;
  query.entity_label = "Q";
  query.languages = {kEn};
  TimelineDocument document = ExecuteTimeline(query, store);
  EXPECT_TRUE(document.entries.empty());
  ASSERT_EQ(document.diagnostics.size(), 1u);
  EXPECT_EQ(document.diagnostics[0].kind, "missing_time");
}

TEST(ExecuteTimelineTest, CardinalityAndOrderOnThirtyCandidates) {
  std::mt19937 rng(1);
  EventStore store = StoreFromText(DumpOf(30, rng));
  TimelineQuery query;
  query.entity_label = "Q";
  query.languages = {kEn, kDe, kFr};
  query.k = 8;
  TimelineDocument document = ExecuteTimeline(query, store);
  EXPECT_LE(document.entries.size(), 24u);
  EXPECT_GE(document.entries.size(), 8u);
  for (size_t i = 1; i < document.entries.size(); ++i) {
    EXPECT_LE(document.entries[i - 1].begin, document.entries[i].begin);
  }
}

TEST(ExecuteTimelineTest, ResolutionErrorsPropagate) {
  EventStore berlin = LoadStore("berlin.nq");
  TimelineQuery query;
  query.entity_label = "Berlin";
  query.languages = {kEn};
  try {
    ExecuteTimeline(query, berlin);
    FAIL() << "expected EntityAmbiguous";
  } catch (const EntityAmbiguous &error) {
    EXPECT_EQ(error.matches().size(), 2u);
  }
  query.entity_label = "Atlantis";
  EXPECT_THROW(ExecuteTimeline(query, berlin), EntityNotFound);
  query.entity_label.clear();
  query.entity_iri = "http://ex.org/entity/none";
  EXPECT_THROW(ExecuteTimeline(query, berlin), EntityNotFound);
  query.entity_iri = "http://ex.org/entity/Berlin_city";
  TimelineDocument document = ExecuteTimeline(query, berlin);
  ASSERT_EQ(document.entries.size(), 1u);
  EXPECT_EQ(document.entries[0].label, "Fall of the Berlin Wall");
}

TEST(ExecuteTimelineTest, InvalidQueries) {
  EventStore store = LoadStore("brexit_mini.nq");
  TimelineQuery query = MiniQuery(RankingCriterion::kCombined);
  query.languages.clear();
  EXPECT_THROW(ExecuteTimeline(query, store), std::invalid_argument);
  query = MiniQuery(RankingCriterion::kCombined);
  query.k = 0;
  EXPECT_THROW(ExecuteTimeline(query, store), std::invalid_argument);
  query = MiniQuery(RankingCriterion::kCombined);
  query.window = DateWindow{Date{2018, 1, 1}, Date{2015, 1, 1}};
  EXPECT_THROW(ExecuteTimeline(query, store), std::invalid_argument);
}

// Timeline invariants over random stores and queries.
TEST(ExecuteTimelinePropertyTest, Invariants) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    EventStore store = StoreFromText(DumpOf(1 + rng() % 25, rng));
    TimelineQuery query;
    query.entity_label = "Q";
    query.languages = {kEn, kDe, kFr};
    query.k = 1 + rng() % 5;
    query.criterion = static_cast<RankingCriterion>(rng() % 3);
    TimelineDocument document = ExecuteTimeline(query, store);
    RankedCandidates ranked = RankCandidates(query, store);

    EXPECT_LE(document.entries.size(), query.k * query.languages.size());
    for (size_t i = 0; i < document.entries.size(); ++i) {
      const TimelineEntry &entry = document.entries[i];
      EXPECT_FALSE(entry.ranks.empty());
      for (const auto &[language, rank] : entry.ranks) EXPECT_LE(rank, query.k);
      double sum = 0;
      for (const auto &[language, fraction] : entry.slices) {
        EXPECT_GE(fraction, 0.0);
        EXPECT_LE(fraction, 1.0);
        sum += fraction;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
      EXPECT_EQ(entry.multi_day, entry.end.has_value() && entry.begin < *entry.end);
      if (i > 0) {
        const TimelineEntry &prev = document.entries[i - 1];
        auto key = [](const TimelineEntry &e) {
          return std::make_tuple(e.begin, !e.end.has_value(), e.end.value_or(Date{}), e.id);
        };
        EXPECT_LT(key(prev), key(entry));
      }
    }

    // Dropping a language leaves the remaining languages' scores unchanged.
    TimelineQuery fewer = query;
    fewer.languages = {kEn, kFr};
    RankedCandidates reduced = RankCandidates(fewer, store);
    for (Language language : fewer.languages) {
      const auto &all = ranked.table.ScoresIn(language);
      const auto &some = reduced.table.ScoresIn(language);
      ASSERT_EQ(all.size(), some.size());
      for (size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].combined, some[i].combined);
        EXPECT_EQ(all[i].popularity, some[i].popularity);
      }
      EXPECT_EQ(ranked.table.RankedIn(language), reduced.table.RankedIn(language));
    }
  }
}

TEST(ApplyWindowTest, Examples) {
  DateWindow window{Date{2015, 1, 1}, Date{2018, 1, 31}};
  CandidateSet set;
  set.events = {
      {"point", TimeSpan{Date{2016, 6, 23}, std::nullopt}, {}},
      {"disjoint", TimeSpan{Date{2014, 1, 1}, Date{2014, 12, 31}}, {}},
      {"overlap", TimeSpan{Date{2014, 6, 1}, Date{2015, 6, 1}}, {}},
      {"edge", TimeSpan{Date{2018, 1, 31}, std::nullopt}, {}},
      {"after", TimeSpan{Date{2018, 2, 1}, std::nullopt}, {}},
  };
  std::vector<Diagnostic> dropped;
  CandidateSet kept = ApplyWindow(set, window, &dropped);
  std::vector<std::string> ids;
  for (const auto &c : kept.events) ids.push_back(c.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"point", "overlap", "edge"}));
  ASSERT_EQ(dropped.size(), 2u);
  EXPECT_EQ(dropped[0].id, "disjoint");
  EXPECT_EQ(dropped[1].id, "after");
}

TEST(SliceFractionsTest, Examples) {
  EXPECT_EQ(SliceFractions(std::vector<double>{0.5, 0.5}), (std::vector<double>{0.5, 0.5}));
  auto thirds = SliceFractions(std::vector<double>{1.0, 0.25, 0.25});
  EXPECT_NEAR(thirds[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(thirds[1], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(thirds[2], 1.0 / 6.0, 1e-15);
  auto uniform = SliceFractions(std::vector<double>{0, 0, 0});
  for (double f : uniform) EXPECT_DOUBLE_EQ(f, 1.0 / 3.0);
  EXPECT_TRUE(SliceFractions(std::vector<double>{}).empty());
}

TEST(DisplayLabelTest, Examples) {
  GraphNode node;
  node.id = "http://ex.org/entity/Q12345";
  node.labels = {{kDe, "Brexit-Referendum"}, {kEn, "Brexit referendum"}};
  EXPECT_EQ(DisplayLabel(node, {kEn, kDe}), "Brexit referendum");
  EXPECT_EQ(DisplayLabel(node, {kDe, kEn}), "Brexit-Referendum");
  EXPECT_EQ(DisplayLabel(node, {kFr}), "Brexit referendum");
  node.labels = {{kRu, "Брексит"}};
  EXPECT_EQ(DisplayLabel(node, {kEn, kDe}), "Брексит");
  node.labels.clear();
  EXPECT_EQ(DisplayLabel(node, {kEn}), "Q12345");
  node.id = "http://ex.org/onto#Thing";
  EXPECT_EQ(DisplayLabel(node, {kEn}), "Thing");
}

TEST(TimelineJsonTest, FieldNamesAndOrder) {
  EventStore store = LoadStore("brexit_mini.nq");
  TimelineQuery query = MiniQuery(RankingCriterion::kCombined);
  query.window = DateWindow{Date{2015, 1, 1}, Date{2018, 1, 31}};
  auto json = ToJson(ExecuteTimeline(query, store));
  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"query", "criterion", "alpha", "w", "entries",
                                            "diagnostics"}));
  EXPECT_EQ(json["criterion"], "combined");
  EXPECT_EQ(json["alpha"], 0.25);
  EXPECT_EQ(json["query"]["window"]["to"], "2018-01-31");
  const auto &entry = json["entries"][0];
  for (const char *key : {"id", "label", "begin", "end", "multiDay", "overallRelevance",
                          "slices", "scores"}) {
    EXPECT_TRUE(entry.contains(key)) << key;
  }
  for (const char *key : {"popularity", "relationStrength", "combined", "links", "pair",
                          "mentions"}) {
    EXPECT_TRUE(entry["scores"]["en"].contains(key)) << key;
  }
  EXPECT_EQ(json["entries"][0]["id"], "http://ex.org/event/migrant_crisis");
  EXPECT_EQ(json["entries"][0]["end"], "2017-12-31");
  EXPECT_EQ(json["entries"][0]["multiDay"], true);
}

TEST(TimelineTsvTest, OneRowPerEntry) {
  EventStore store = LoadStore("brexit_mini.nq");
  TimelineDocument document = ExecuteTimeline(MiniQuery(RankingCriterion::kPopularity), store);
  std::string tsv = ToTsv(document);
  std::istringstream in(tsv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "#begin\tend\tid\tlabel\toverallRelevance\ten\tde\tfr");
  size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 7);
  }
  EXPECT_EQ(rows, document.entries.size());
}

}  // namespace
}  // namespace chronoglot
