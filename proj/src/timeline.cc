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

#include <algorithm>
#include <numeric>
#include <tuple>

namespace chronoglot {

void TimelineQuery::Validate() const {
  if (entity_iri.empty() && entity_label.empty()) {
    throw std::invalid_argument("query entity is required");
  }
  if (languages.empty()) throw std::invalid_argument("at least one language is required");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (window && window->to < window->from) {
    throw std::invalid_argument("window start is after window end");
  }
  config.Validate();
}

const GraphNode &ResolveQueryEntity(const TimelineQuery &query, const EventStore &store) {
  if (!query.entity_iri.empty()) {
    const GraphNode *node = store.FindNode(query.entity_iri);
    if (node == nullptr) throw EntityNotFound(query.entity_iri);
    return *node;
  }
  Resolution resolution = store.Resolve(query.entity_label, query.entity_language);
  switch (resolution.status) {
    case Resolution::Status::kFound:
      return *resolution.node;
    case Resolution::Status::kAmbiguous:
      throw EntityAmbiguous(query.entity_label, std::move(resolution.matches));
    case Resolution::Status::kNotFound:
      break;
  }
  throw EntityNotFound(query.entity_label);
}

CandidateSet ApplyWindow(CandidateSet candidates, const DateWindow &window,
                         std::vector<Diagnostic> *dropped) {
  auto outside = [&](const Candidate &c) {
    if (!c.time_span) return true;
    const Date &begin = c.time_span->begin;
    const Date &end = c.time_span->end.value_or(begin);
    return end < window.from || window.to < begin;
  };
  std::vector<Candidate> kept;
  kept.reserve(candidates.events.size());
  for (Candidate &candidate : candidates.events) {
    if (outside(candidate)) {
      if (dropped != nullptr) {
        dropped->push_back({candidate.time_span ? "outside_window" : "missing_time",
                            candidate.id});
      }
      continue;
    }
    kept.push_back(std::move(candidate));
  }
  candidates.events = std::move(kept);
  return candidates;
}

std::vector<double> SliceFractions(std::span<const double> scores) {
  std::vector<double> fractions(scores.size());
  if (scores.empty()) return fractions;
  double total = std::accumulate(scores.begin(), scores.end(), 0.0);
  if (total <= 0.0) {
    std::fill(fractions.begin(), fractions.end(), 1.0 / static_cast<double>(scores.size()));
    return fractions;
  }
  for (size_t i = 0; i < scores.size(); ++i) fractions[i] = scores[i] / total;
  return fractions;
}

std::string DisplayLabel(const GraphNode &node, const std::vector<Language> &languages) {
  for (Language language : languages) {
    if (auto it = node.labels.find(language); it != node.labels.end()) return it->second;
  }
  if (auto it = node.labels.find(Language::Of("en")); it != node.labels.end()) {
    return it->second;
  }
  if (!node.labels.empty()) return node.labels.begin()->second;
  std::string_view id = node.id;
  while (!id.empty() && (id.back() == '/' || id.back() == '#')) id.remove_suffix(1);
  size_t cut = id.find_last_of("/#");
  return std::string(cut == std::string_view::npos ? id : id.substr(cut + 1));
}

RankedCandidates RankCandidates(const TimelineQuery &query, const EventStore &store) {
  query.Validate();
  RankedCandidates ranked;
  ranked.entity = &ResolveQueryEntity(query, store);
  CandidateSet candidates = store.Candidates(*ranked.entity);

  std::vector<Candidate> dated;
  dated.reserve(candidates.events.size());
  for (Candidate &candidate : candidates.events) {
    if (!candidate.time_span) {
      ranked.diagnostics.push_back({"missing_time", candidate.id});
      continue;
    }
    dated.push_back(std::move(candidate));
  }
  candidates.events = std::move(dated);
  if (query.window) {
    candidates = ApplyWindow(std::move(candidates), *query.window, &ranked.diagnostics);
  }
  ranked.table =
      BuildScoreTable(candidates, query.languages, query.criterion, query.config);
  ranked.candidates = std::move(candidates);
  return ranked;
}

TimelineDocument ExecuteTimeline(const TimelineQuery &query, const EventStore &store) {
  RankedCandidates ranked = RankCandidates(query, store);

  TimelineDocument document;
  document.entity_id = ranked.entity->id;
  document.entity_labels = ranked.entity->labels;
  document.existence = store.ExistenceTime(*ranked.entity);
  document.languages = query.languages;
  document.k = query.k;
  document.window = query.window;
  document.criterion = query.criterion;
  document.config = query.config;
  document.diagnostics = std::move(ranked.diagnostics);

  for (SelectedEvent &selected : TopKUnion(ranked.table, query.k)) {
    const Candidate &candidate = *ranked.candidates.Find(selected.id);
    const GraphNode &node = *store.FindNode(selected.id);
    TimelineEntry entry;
    entry.id = selected.id;
    entry.label = DisplayLabel(node, query.languages);
    entry.begin = candidate.time_span->begin;
    entry.end = candidate.time_span->end;
    entry.multi_day = entry.end.has_value() && entry.begin < *entry.end;
    entry.ranks = std::move(selected.ranks);

    std::vector<double> criterion_scores;
    for (Language language : query.languages) {
      const LanguageScore &score = *ranked.table.Find(selected.id, language);
      criterion_scores.push_back(score.Score(query.criterion));
      entry.overall_relevance += criterion_scores.back();
      entry.scores.emplace(language, score);
    }
    std::vector<double> fractions = SliceFractions(criterion_scores);
    for (size_t i = 0; i < query.languages.size(); ++i) {
      entry.slices[query.languages[i]] = fractions[i];
    }
    document.entries.push_back(std::move(entry));
  }

  std::sort(document.entries.begin(), document.entries.end(),
            [](const TimelineEntry &a, const TimelineEntry &b) {
              if (a.begin != b.begin) return a.begin < b.begin;
              if (a.end.has_value() != b.end.has_value()) return a.end.has_value();
              if (a.end && *a.end != *b.end) return *a.end < *b.end;
              return a.id < b.id;
            });
  return document;
}

}  // namespace chronoglot
