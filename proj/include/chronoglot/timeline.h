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

#ifndef CHRONOGLOT_TIMELINE_H_
#define CHRONOGLOT_TIMELINE_H_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronoglot/date.h"
#include "chronoglot/event_store.h"
#include "chronoglot/language.h"
#include "chronoglot/relevance.h"

namespace chronoglot {

struct DateWindow {
  Date from;
  Date to;

  bool operator==(const DateWindow &) const = default;
};

// A timeline request. The entity is given either by label in a language or
// directly by IRI; a non-empty entity_iri bypasses label resolution.
struct TimelineQuery {
  std::string entity_label;
  Language entity_language = Language::Of("en");
  std::string entity_iri;
  std::vector<Language> languages;
  size_t k = 8;
  RankingCriterion criterion = RankingCriterion::kCombined;
  std::optional<DateWindow> window;
  ScoringConfig config;

  // Throws std::invalid_argument on an invalid query.
  void Validate() const;
};

struct TimelineEntry {
  std::string id;
  std::string label;
  Date begin;
  std::optional<Date> end;
  bool multi_day = false;
  // Sum over the queried languages of the criterion score.
  double overall_relevance = 0;
  // Each language's share of overall_relevance; sums to one.
  std::map<Language, double> slices;
  std::map<Language, LanguageScore> scores;
  std::map<Language, size_t> ranks;
};

struct Diagnostic {
  std::string kind;  // "missing_time" or "outside_window"
  std::string id;
};

struct TimelineDocument {
  std::string entity_id;
  std::map<Language, std::string> entity_labels;
  std::optional<TimeSpan> existence;
  std::vector<Language> languages;
  size_t k = 0;
  std::optional<DateWindow> window;
  RankingCriterion criterion = RankingCriterion::kCombined;
  ScoringConfig config;
  // Sorted by (begin, end with none last, id).
  std::vector<TimelineEntry> entries;
  std::vector<Diagnostic> diagnostics;
};

class EntityNotFound : public std::runtime_error {
 public:
  explicit EntityNotFound(const std::string &entity)
      : std::runtime_error("entity not found: " + entity) {}
};

class EntityAmbiguous : public std::runtime_error {
 public:
  EntityAmbiguous(const std::string &label, std::vector<EntityMatch> matches)
      : std::runtime_error("ambiguous entity label: " + label),
        matches_(std::move(matches)) {}
  const std::vector<EntityMatch> &matches() const { return matches_; }

 private:
  std::vector<EntityMatch> matches_;
};

// Resolves the query entity. Throws EntityNotFound or EntityAmbiguous.
const GraphNode &ResolveQueryEntity(const TimelineQuery &query, const EventStore &store);

// Keeps events whose span intersects [from, to]; an event without an end is
// a point at its begin. Events without a begin are dropped. Dropped ids are
// appended to dropped when given.
CandidateSet ApplyWindow(CandidateSet candidates, const DateWindow &window,
                         std::vector<Diagnostic> *dropped = nullptr);

// score / sum; uniform when the sum is zero.
std::vector<double> SliceFractions(std::span<const double> scores);

// First label in the order of languages, then en, then any, then the IRI's
// last path or fragment segment.
std::string DisplayLabel(const GraphNode &node, const std::vector<Language> &languages);

// The scoring stage of a timeline: resolved entity, filtered candidates and
// their score table.
struct RankedCandidates {
  const GraphNode *entity = nullptr;
  CandidateSet candidates;
  ScoreTable table;
  std::vector<Diagnostic> diagnostics;
};

RankedCandidates RankCandidates(const TimelineQuery &query, const EventStore &store);

// resolve -> candidates -> drop undated -> window -> score -> top-k union ->
// chronological entries.
TimelineDocument ExecuteTimeline(const TimelineQuery &query, const EventStore &store);

}  // namespace chronoglot

#endif  // CHRONOGLOT_TIMELINE_H_
