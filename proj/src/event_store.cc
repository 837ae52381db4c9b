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

#include "chronoglot/event_store.h"

#include <algorithm>

namespace chronoglot {
namespace {

void AppendUtf8(std::string &out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

uint32_t FoldCodePoint(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  // Latin Extended-A pairs (e.g. Ł/ł, Č/č): even upper, odd lower.
  if (cp >= 0x100 && cp <= 0x137 && cp % 2 == 0) return cp + 1;
  if (cp >= 0x14A && cp <= 0x177 && cp % 2 == 0) return cp + 1;
  return cp;
}

uint64_t MaxWithWarning(const std::set<uint64_t> &values, const StatisticKey &key,
                        std::vector<std::string> &warnings) {
  if (values.size() > 1) {
    warnings.push_back("duplicate_statistic: <" + key.subject + "> " +
                       (key.statistic == Statistic::kLinks ? "links" : "mentions") +
                       "@" + key.language.code() + " has " +
                       std::to_string(values.size()) + " values; using maximum");
  }
  return *values.rbegin();
}

}  // namespace

std::string FoldCase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    if (lead < 0x80) {
      out += static_cast<char>(FoldCodePoint(lead));
      ++i;
    } else if ((lead & 0xE0) == 0xC0 && i + 1 < text.size()) {
      uint32_t cp = ((lead & 0x1F) << 6) |
                    (static_cast<unsigned char>(text[i + 1]) & 0x3F);
      AppendUtf8(out, FoldCodePoint(cp));
      i += 2;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

RawCounts Candidate::CountsIn(Language language) const {
  auto it = counts.find(language);
  return it == counts.end() ? RawCounts{} : it->second;
}

const Candidate *CandidateSet::Find(std::string_view id) const {
  auto it = std::lower_bound(events.begin(), events.end(), id,
                             [](const Candidate &c, std::string_view key) {
                               return c.id < key;
                             });
  return it != events.end() && it->id == id ? &*it : nullptr;
}

EventStore EventStore::Build(const RawGraph &raw) {
  EventStore store;
  const Vocabulary &vocab = raw.vocabulary();

  // Relation nodes: subjects carrying rdf:subject or rdf:object.
  std::set<std::string> relation_ids;
  for (const auto &[id, _] : raw.relation_subjects) relation_ids.insert(id);
  for (const auto &[id, _] : raw.relation_objects) relation_ids.insert(id);

  auto node_for = [&](const std::string &id) -> GraphNode & {
    auto [it, inserted] = store.nodes_.try_emplace(id);
    if (inserted) it->second.id = id;
    return it->second;
  };

  for (const auto &[id, types] : raw.types) {
    if (relation_ids.count(id)) continue;
    GraphNode &node = node_for(id);
    if (types.count(vocab.event_class)) node.kind = NodeKind::kEvent;
  }
  for (const auto &[id, by_language] : raw.labels) {
    if (relation_ids.count(id)) continue;
    GraphNode &node = node_for(id);
    for (const auto &[language, texts] : by_language) {
      // Several labels in one language: the smallest is the display label,
      // all of them are resolvable.
      node.labels[language] = *texts.begin();
    }
  }
  for (const auto &[id, dates] : raw.begin_dates) {
    if (relation_ids.count(id)) continue;
    GraphNode &node = node_for(id);
    if (dates.size() > 1) {
      store.warnings_.push_back("conflicting_begin: <" + id + "> using earliest");
    }
    node.time_span = TimeSpan{*dates.begin(), std::nullopt};
  }
  for (const auto &[id, dates] : raw.end_dates) {
    if (relation_ids.count(id)) continue;
    GraphNode &node = node_for(id);
    if (dates.size() > 1) {
      store.warnings_.push_back("conflicting_end: <" + id + "> using latest");
    }
    if (!node.time_span) continue;  // an end without a begin is not placeable
    const Date &end = *dates.rbegin();
    if (end < node.time_span->begin) {
      store.warnings_.push_back("end_before_begin: <" + id + "> end dropped");
      continue;
    }
    node.time_span->end = end;
  }

  for (const std::string &id : relation_ids) {
    auto subjects = raw.relation_subjects.find(id);
    auto objects = raw.relation_objects.find(id);
    if (subjects == raw.relation_subjects.end() ||
        objects == raw.relation_objects.end()) {
      store.warnings_.push_back("incomplete_relation: <" + id +
                                "> lacks subject or object; skipped");
      continue;
    }
    if (subjects->second.size() > 1 || objects->second.size() > 1) {
      store.warnings_.push_back("multi_endpoint_relation: <" + id +
                                "> using smallest endpoint IRIs");
    }
    RelationEdge edge;
    edge.id = id;
    edge.subject_id = *subjects->second.begin();
    edge.object_id = *objects->second.begin();
    if (auto roles = raw.role_types.find(id); roles != raw.role_types.end()) {
      edge.kind = RelationKind::kSemantic;
      edge.role_type = *roles->second.begin();
    }
    store.edges_.emplace(id, std::move(edge));
  }

  for (const auto &[key, values] : raw.statistics) {
    uint64_t value = MaxWithWarning(values, key, store.warnings_);
    if (auto edge = store.edges_.find(key.subject); edge != store.edges_.end()) {
      auto &target = key.statistic == Statistic::kLinks ? edge->second.pair_links
                                                        : edge->second.pair_mentions;
      target[key.language] = value;
    } else if (key.statistic == Statistic::kLinks) {
      node_for(key.subject).link_count[key.language] = value;
    } else {
      store.warnings_.push_back("orphan_mentions: <" + key.subject +
                                "> mentions outside a relation ignored");
      continue;
    }
    store.languages_.insert(key.language);
  }

  for (const std::string &id : raw.seed_nodes) {
    if (!relation_ids.count(id)) node_for(id);
  }
  for (const auto &[id, edge] : store.edges_) {
    node_for(edge.subject_id);
    node_for(edge.object_id);
    store.adjacency_[edge.subject_id].push_back(id);
    if (edge.object_id != edge.subject_id) {
      store.adjacency_[edge.object_id].push_back(id);
    }
  }
  for (const auto &[id, node] : store.nodes_) {
    if (node.is_event()) ++store.event_count_;
  }
  store.IndexLabels();
  for (const auto &[id, by_language] : raw.labels) {
    if (relation_ids.count(id)) continue;
    for (const auto &[language, texts] : by_language) {
      store.languages_.insert(language);
      // Secondary labels are resolvable too.
      for (auto it = std::next(texts.begin()); it != texts.end(); ++it) {
        store.exact_labels_[language][*it].push_back(id);
        store.folded_labels_[language][FoldCase(*it)].push_back(id);
      }
    }
  }
  for (auto *index : {&store.exact_labels_, &store.folded_labels_}) {
    for (auto &[language, labels] : *index) {
      for (auto &[text, ids] : labels) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      }
    }
  }
  return store;
}

void EventStore::IndexLabels() {
  for (const auto &[id, node] : nodes_) {
    for (const auto &[language, text] : node.labels) {
      exact_labels_[language][text].push_back(id);
      folded_labels_[language][FoldCase(text)].push_back(id);
    }
  }
}

const GraphNode *EventStore::FindNode(std::string_view id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const RelationEdge *EventStore::FindEdge(std::string_view id) const {
  auto it = edges_.find(id);
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<const RelationEdge *> EventStore::IncidentEdges(std::string_view id) const {
  std::vector<const RelationEdge *> result;
  auto it = adjacency_.find(std::string(id));
  if (it == adjacency_.end()) return result;
  result.reserve(it->second.size());
  for (const std::string &edge_id : it->second) result.push_back(FindEdge(edge_id));
  return result;
}

Resolution EventStore::Resolve(std::string_view label, Language language) const {
  Resolution resolution;
  const std::vector<std::string> *ids = nullptr;
  auto lookup = [&](const std::map<Language, LabelIndex> &index,
                    const std::string &key) -> const std::vector<std::string> * {
    auto by_language = index.find(language);
    if (by_language == index.end()) return nullptr;
    auto hit = by_language->second.find(key);
    return hit == by_language->second.end() ? nullptr : &hit->second;
  };
  ids = lookup(exact_labels_, std::string(label));
  if (ids == nullptr) ids = lookup(folded_labels_, FoldCase(label));
  if (ids == nullptr || ids->empty()) return resolution;

  for (const std::string &id : *ids) {
    const GraphNode &node = nodes_.at(id);
    auto text = node.labels.find(language);
    resolution.matches.push_back(
        {id, text == node.labels.end() ? std::string(label) : text->second});
  }
  if (ids->size() == 1) {
    resolution.status = Resolution::Status::kFound;
    resolution.node = FindNode(ids->front());
  } else {
    resolution.status = Resolution::Status::kAmbiguous;
  }
  return resolution;
}

CandidateSet EventStore::Candidates(const GraphNode &q) const {
  CandidateSet result;
  result.query_id = q.id;
  std::map<std::string, Candidate> by_id;
  std::vector<const RelationEdge *> incident = IncidentEdges(q.id);

  for (const RelationEdge *edge : incident) {
    if (edge->kind != RelationKind::kSemantic) continue;
    const std::string &other =
        edge->subject_id == q.id ? edge->object_id : edge->subject_id;
    if (other == q.id) continue;
    const GraphNode *node = FindNode(other);
    if (node == nullptr || !node->is_event()) continue;
    auto [it, inserted] = by_id.try_emplace(other);
    if (!inserted) continue;
    it->second.id = other;
    it->second.time_span = node->time_span;
    for (const auto &[language, links] : node->link_count) {
      it->second.counts[language].links = links;
    }
  }
  for (const RelationEdge *edge : incident) {
    if (edge->kind != RelationKind::kLink) continue;
    const std::string &other =
        edge->subject_id == q.id ? edge->object_id : edge->subject_id;
    auto it = by_id.find(other);
    if (it == by_id.end()) continue;
    for (const auto &[language, links] : edge->pair_links) {
      it->second.counts[language].pair += links;
    }
    for (const auto &[language, mentions] : edge->pair_mentions) {
      it->second.counts[language].mentions += mentions;
    }
  }
  result.events.reserve(by_id.size());
  for (auto &[id, candidate] : by_id) result.events.push_back(std::move(candidate));
  return result;
}

}  // namespace chronoglot
