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

#include "chronoglot/timeline_json.h"

#include <charconv>

namespace chronoglot {
namespace {

using nlohmann::ordered_json;

ordered_json DateOrNull(const std::optional<Date> &date) {
  return date ? ordered_json(date->ToString()) : ordered_json(nullptr);
}

std::string ShortestDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string TsvField(std::string_view text) {
  std::string out;
  for (char c : text) out += (c == '\t' || c == '\n' || c == '\r') ? ' ' : c;
  return out;
}

}  // namespace

ordered_json ScoreToJson(const LanguageScore &score) {
  ordered_json json;
  json["popularity"] = score.popularity;
  json["relationStrength"] = score.relation_strength;
  json["combined"] = score.combined;
  json["links"] = score.counts.links;
  json["pair"] = score.counts.pair;
  json["mentions"] = score.counts.mentions;
  return json;
}

ordered_json ToJson(const TimelineDocument &document) {
  ordered_json query;
  query["entity"] = document.entity_id;
  ordered_json labels = ordered_json::object();
  for (const auto &[language, label] : document.entity_labels) {
    labels[language.code()] = label;
  }
  query["labels"] = std::move(labels);
  if (document.existence) {
    query["existence"] = {{"begin", document.existence->begin.ToString()},
                          {"end", DateOrNull(document.existence->end)}};
  } else {
    query["existence"] = nullptr;
  }
  ordered_json languages = ordered_json::array();
  for (Language language : document.languages) languages.push_back(language.code());
  query["langs"] = std::move(languages);
  query["k"] = document.k;
  if (document.window) {
    query["window"] = {{"from", document.window->from.ToString()},
                       {"to", document.window->to.ToString()}};
  } else {
    query["window"] = nullptr;
  }

  ordered_json json;
  json["query"] = std::move(query);
  json["criterion"] = std::string(CriterionName(document.criterion));
  json["alpha"] = document.config.alpha;
  json["w"] = document.config.w;

  ordered_json entries = ordered_json::array();
  for (const TimelineEntry &entry : document.entries) {
    ordered_json item;
    item["id"] = entry.id;
    item["label"] = entry.label;
    item["begin"] = entry.begin.ToString();
    item["end"] = DateOrNull(entry.end);
    item["multiDay"] = entry.multi_day;
    item["overallRelevance"] = entry.overall_relevance;
    ordered_json slices = ordered_json::object();
    ordered_json scores = ordered_json::object();
    ordered_json ranks = ordered_json::object();
    for (Language language : document.languages) {
      slices[language.code()] = entry.slices.at(language);
      scores[language.code()] = ScoreToJson(entry.scores.at(language));
      if (auto it = entry.ranks.find(language); it != entry.ranks.end()) {
        ranks[language.code()] = it->second;
      }
    }
    item["slices"] = std::move(slices);
    item["scores"] = std::move(scores);
    item["ranks"] = std::move(ranks);
    entries.push_back(std::move(item));
  }
  json["entries"] = std::move(entries);

  ordered_json diagnostics = ordered_json::array();
  for (const Diagnostic &diagnostic : document.diagnostics) {
    diagnostics.push_back({{"kind", diagnostic.kind}, {"id", diagnostic.id}});
  }
  json["diagnostics"] = std::move(diagnostics);
  return json;
}

std::string ToTsv(const TimelineDocument &document) {
  std::string out = "#begin\tend\tid\tlabel\toverallRelevance";
  for (Language language : document.languages) out += "\t" + language.code();
  out += '\n';
  for (const TimelineEntry &entry : document.entries) {
    out += entry.begin.ToString();
    out += '\t';
    out += entry.end ? entry.end->ToString() : "";
    out += '\t';
    out += TsvField(entry.id);
    out += '\t';
    out += TsvField(entry.label);
    out += '\t';
    out += ShortestDouble(entry.overall_relevance);
    for (Language language : document.languages) {
      out += '\t';
      out += ShortestDouble(entry.scores.at(language).Score(document.criterion));
    }
    out += '\n';
  }
  return out;
}

}  // namespace chronoglot
