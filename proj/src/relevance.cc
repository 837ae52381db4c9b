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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chronoglot {

void ScoringConfig::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("w must be in [0, 1]");
  }
}

std::string_view CriterionName(RankingCriterion criterion) {
  switch (criterion) {
    case RankingCriterion::kPopularity: return "popularity";
    case RankingCriterion::kRelationStrength: return "relation_strength";
    case RankingCriterion::kCombined: return "combined";
  }
  return "combined";
}

std::optional<RankingCriterion> ParseCriterion(std::string_view name) {
  if (name == "popularity") return RankingCriterion::kPopularity;
  if (name == "relation_strength" || name == "relationStrength") {
    return RankingCriterion::kRelationStrength;
  }
  if (name == "combined") return RankingCriterion::kCombined;
  return std::nullopt;
}

double LanguageScore::Score(RankingCriterion criterion) const {
  switch (criterion) {
    case RankingCriterion::kPopularity: return popularity;
    case RankingCriterion::kRelationStrength: return relation_strength;
    case RankingCriterion::kCombined: return combined;
  }
  return combined;
}

double Normalize(uint64_t count, uint64_t max_count, double alpha) {
  if (max_count == 0 || count == 0) return 0.0;
  if (count >= max_count) return 1.0;
  return std::pow(static_cast<double>(count) / static_cast<double>(max_count), alpha);
}

RawCounts MaximaIn(const CandidateSet &candidates, Language language) {
  RawCounts maxima;
  for (const Candidate &candidate : candidates.events) {
    RawCounts counts = candidate.CountsIn(language);
    maxima.links = std::max(maxima.links, counts.links);
    maxima.pair = std::max(maxima.pair, counts.pair);
    maxima.mentions = std::max(maxima.mentions, counts.mentions);
  }
  return maxima;
}

LanguageScore ScoreCounts(const RawCounts &counts, const RawCounts &maxima,
                          const ScoringConfig &config) {
  LanguageScore score;
  score.counts = counts;
  score.maxima = maxima;
  score.popularity = Normalize(counts.links, maxima.links, config.alpha);
  score.relation_strength = 0.5 * Normalize(counts.pair, maxima.pair, config.alpha) +
                            0.5 * Normalize(counts.mentions, maxima.mentions, config.alpha);
  score.combined =
      config.w * score.popularity + (1.0 - config.w) * score.relation_strength;
  return score;
}

double Popularity(const Candidate &event, Language language,
                  const CandidateSet &candidates, const ScoringConfig &config) {
  return ScoreCounts(event.CountsIn(language), MaximaIn(candidates, language), config)
      .popularity;
}

double RelationStrength(const Candidate &event, Language language,
                        const CandidateSet &candidates, const ScoringConfig &config) {
  return ScoreCounts(event.CountsIn(language), MaximaIn(candidates, language), config)
      .relation_strength;
}

double Combined(const Candidate &event, Language language,
                const CandidateSet &candidates, const ScoringConfig &config) {
  return ScoreCounts(event.CountsIn(language), MaximaIn(candidates, language), config)
      .combined;
}

const std::vector<LanguageScore> &ScoreTable::ScoresIn(Language language) const {
  static const std::vector<LanguageScore> kEmpty;
  auto it = scores_.find(language);
  return it == scores_.end() ? kEmpty : it->second;
}

const LanguageScore *ScoreTable::Find(std::string_view event_id,
                                      Language language) const {
  auto position = std::lower_bound(events_.begin(), events_.end(), event_id);
  if (position == events_.end() || *position != event_id) {
    // Candidate sets are id-ordered, but fall back to a scan otherwise.
    position = std::find(events_.begin(), events_.end(), event_id);
    if (position == events_.end()) return nullptr;
  }
  const auto &scores = ScoresIn(language);
  size_t index = static_cast<size_t>(position - events_.begin());
  return index < scores.size() ? &scores[index] : nullptr;
}

const std::vector<size_t> &ScoreTable::RankedIn(Language language) const {
  static const std::vector<size_t> kEmpty;
  auto it = ranked_.find(language);
  return it == ranked_.end() ? kEmpty : it->second;
}

ScoreTable BuildScoreTable(const CandidateSet &candidates,
                           const std::vector<Language> &languages,
                           RankingCriterion criterion, const ScoringConfig &config) {
  config.Validate();
  ScoreTable table;
  table.query_id_ = candidates.query_id;
  table.criterion_ = criterion;
  table.config_ = config;
  table.languages_ = languages;
  for (const Candidate &candidate : candidates.events) {
    table.events_.push_back(candidate.id);
  }

  for (Language language : languages) {
    RawCounts maxima = MaximaIn(candidates, language);
    std::vector<LanguageScore> &scores = table.scores_[language];
    scores.reserve(candidates.events.size());
    for (const Candidate &candidate : candidates.events) {
      LanguageScore score = ScoreCounts(candidate.CountsIn(language), maxima, config);
      score.event_id = candidate.id;
      score.language = language;
      scores.push_back(std::move(score));
    }

    std::vector<size_t> &order = table.ranked_[language];
    order.resize(candidates.events.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      double sa = scores[a].Score(criterion);
      double sb = scores[b].Score(criterion);
      if (sa != sb) return sa > sb;
      const auto &span_a = candidates.events[a].time_span;
      const auto &span_b = candidates.events[b].time_span;
      // Events without a begin date sort after dated ones.
      if (span_a.has_value() != span_b.has_value()) return span_a.has_value();
      if (span_a && span_a->begin != span_b->begin) {
        return span_a->begin < span_b->begin;
      }
      return candidates.events[a].id < candidates.events[b].id;
    });
  }
  return table;
}

std::vector<SelectedEvent> TopKUnion(const ScoreTable &table, size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::map<std::string, std::map<Language, size_t>> selected;
  for (Language language : table.languages()) {
    const auto &order = table.RankedIn(language);
    size_t limit = std::min(k, order.size());
    for (size_t rank = 0; rank < limit; ++rank) {
      selected[table.events()[order[rank]]][language] = rank + 1;
    }
  }
  std::vector<SelectedEvent> result;
  result.reserve(selected.size());
  for (auto &[id, ranks] : selected) result.push_back({id, std::move(ranks)});
  return result;
}

}  // namespace chronoglot
