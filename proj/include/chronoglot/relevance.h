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

#ifndef CHRONOGLOT_RELEVANCE_H_
#define CHRONOGLOT_RELEVANCE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronoglot/event_store.h"
#include "chronoglot/language.h"

namespace chronoglot {

// alpha is the smoothing exponent applied to every normalized count; w
// weighs popularity against relation strength in the combined score.
struct ScoringConfig {
  double alpha = 0.25;
  double w = 1.0 / 3.0;

  // Throws std::invalid_argument unless alpha in (0,1] and w in [0,1].
  void Validate() const;

  bool operator==(const ScoringConfig &) const = default;
};

enum class RankingCriterion { kPopularity, kRelationStrength, kCombined };

std::string_view CriterionName(RankingCriterion criterion);
// Accepts popularity, relation_strength (or relationStrength), combined.
std::optional<RankingCriterion> ParseCriterion(std::string_view name);

struct LanguageScore {
  std::string event_id;
  Language language = Language::Of("en");
  double popularity = 0;
  double relation_strength = 0;
  double combined = 0;
  RawCounts counts;
  // Per-count maxima over the candidate set in this language.
  RawCounts maxima;

  double Score(RankingCriterion criterion) const;
};

// (count / max_count)^alpha, or 0 when max_count is 0.
double Normalize(uint64_t count, uint64_t max_count, double alpha);

// Maximum of each raw count over the candidates in one language.
RawCounts MaximaIn(const CandidateSet &candidates, Language language);

// Scores one event's counts against the language's maxima.
LanguageScore ScoreCounts(const RawCounts &counts, const RawCounts &maxima,
                          const ScoringConfig &config);

double Popularity(const Candidate &event, Language language,
                  const CandidateSet &candidates, const ScoringConfig &config);
double RelationStrength(const Candidate &event, Language language,
                        const CandidateSet &candidates, const ScoringConfig &config);
double Combined(const Candidate &event, Language language,
                const CandidateSet &candidates, const ScoringConfig &config);

// Scores of every candidate in every requested language, and per-language
// rankings on the chosen criterion.
class ScoreTable {
 public:
  const std::string &query_id() const { return query_id_; }
  RankingCriterion criterion() const { return criterion_; }
  const ScoringConfig &config() const { return config_; }
  const std::vector<Language> &languages() const { return languages_; }
  // Event ids in candidate order.
  const std::vector<std::string> &events() const { return events_; }

  // Scores aligned with events().
  const std::vector<LanguageScore> &ScoresIn(Language language) const;
  const LanguageScore *Find(std::string_view event_id, Language language) const;

  // Indices into events(), best first. Ties go to the earlier begin date,
  // then the lexicographically smaller id.
  const std::vector<size_t> &RankedIn(Language language) const;

  bool empty() const { return events_.empty(); }

 private:
  friend ScoreTable BuildScoreTable(const CandidateSet &, const std::vector<Language> &,
                                    RankingCriterion, const ScoringConfig &);

  std::string query_id_;
  RankingCriterion criterion_ = RankingCriterion::kCombined;
  ScoringConfig config_;
  std::vector<Language> languages_;
  std::vector<std::string> events_;
  std::map<Language, std::vector<LanguageScore>> scores_;
  std::map<Language, std::vector<size_t>> ranked_;
};

ScoreTable BuildScoreTable(const CandidateSet &candidates,
                           const std::vector<Language> &languages,
                           RankingCriterion criterion, const ScoringConfig &config);

struct SelectedEvent {
  std::string id;
  // 1-based rank in every language where the event made the top k.
  std::map<Language, size_t> ranks;

  bool operator==(const SelectedEvent &) const = default;
};

// Union over languages of each language's first k events, ordered by id.
std::vector<SelectedEvent> TopKUnion(const ScoreTable &table, size_t k);

}  // namespace chronoglot

#endif  // CHRONOGLOT_RELEVANCE_H_
