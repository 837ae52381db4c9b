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

#ifndef CHRONOGLOT_EVENT_STORE_H_
#define CHRONOGLOT_EVENT_STORE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chronoglot/date.h"
#include "chronoglot/language.h"
#include "chronoglot/raw_graph.h"

namespace chronoglot {

enum class NodeKind { kEvent, kEntity };

// An entity or event. kind is kEvent iff the node was typed schema:Event.
struct GraphNode {
  std::string id;
  NodeKind kind = NodeKind::kEntity;
  std::map<Language, std::string> labels;
  std::optional<TimeSpan> time_span;
  // Incoming links to the node's article per language context.
  std::map<Language, uint64_t> link_count;

  bool is_event() const { return kind == NodeKind::kEvent; }
  bool operator==(const GraphNode &) const = default;
};

enum class RelationKind { kSemantic, kLink };

// A reified relation. Semantic relations carry a role type; link relations
// carry only interlinking statistics between their endpoints.
struct RelationEdge {
  std::string id;
  std::string subject_id;
  std::string object_id;
  RelationKind kind = RelationKind::kLink;
  std::optional<std::string> role_type;
  std::map<Language, uint64_t> pair_links;
  std::map<Language, uint64_t> pair_mentions;

  bool operator==(const RelationEdge &) const = default;
};

// Raw link statistics of a candidate event relative to a query entity.
struct RawCounts {
  uint64_t links = 0;
  uint64_t pair = 0;
  uint64_t mentions = 0;

  bool operator==(const RawCounts &) const = default;
};

struct Candidate {
  std::string id;
  std::optional<TimeSpan> time_span;
  std::map<Language, RawCounts> counts;

  // Zero counts for languages without data.
  RawCounts CountsIn(Language language) const;
};

// The events related to a query entity, ordered by id.
struct CandidateSet {
  std::string query_id;
  std::vector<Candidate> events;

  const Candidate *Find(std::string_view id) const;
};

struct EntityMatch {
  std::string id;
  std::string label;

  bool operator==(const EntityMatch &) const = default;
};

struct Resolution {
  enum class Status { kFound, kNotFound, kAmbiguous };

  Status status = Status::kNotFound;
  const GraphNode *node = nullptr;
  // All matches for kAmbiguous, the single match for kFound.
  std::vector<EntityMatch> matches;
};

// Lowercases ASCII, Latin-1, Greek and Cyrillic letters.
std::string FoldCase(std::string_view text);

// Immutable indexed store over a RawGraph. All accessors are const and safe
// for concurrent readers.
class EventStore {
 public:
  EventStore() = default;

  // Builds the indexes. Conflicting duplicate statistics resolve to the
  // maximum, conflicting timestamps to the widest span, both with a warning.
  // Relation endpoints without any statement of their own become label-less
  // entity nodes.
  static EventStore Build(const RawGraph &raw);

  const GraphNode *FindNode(std::string_view id) const;
  const RelationEdge *FindEdge(std::string_view id) const;

  // Edges having id as subject or object.
  std::vector<const RelationEdge *> IncidentEdges(std::string_view id) const;

  // Exact label match in the language first, then case-folded.
  Resolution Resolve(std::string_view label, Language language) const;

  // Events connected to q by at least one semantic relation in either
  // direction, with per-language counts. Pair and mention counts sum the
  // link relations q->e and e->q.
  CandidateSet Candidates(const GraphNode &q) const;

  std::optional<TimeSpan> ExistenceTime(const GraphNode &node) const {
    return node.time_span;
  }

  const std::map<std::string, GraphNode, std::less<>> &nodes() const { return nodes_; }
  const std::map<std::string, RelationEdge, std::less<>> &edges() const { return edges_; }
  const std::set<Language> &languages() const { return languages_; }
  const std::vector<std::string> &warnings() const { return warnings_; }
  size_t event_count() const { return event_count_; }

  // Compares nodes and edges; the derived indexes follow from them.
  bool operator==(const EventStore &other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  using LabelIndex = std::unordered_map<std::string, std::vector<std::string>>;

  void IndexLabels();

  std::map<std::string, GraphNode, std::less<>> nodes_;
  std::map<std::string, RelationEdge, std::less<>> edges_;
  std::map<Language, LabelIndex> exact_labels_;
  std::map<Language, LabelIndex> folded_labels_;
  std::unordered_map<std::string, std::vector<std::string>> adjacency_;
  std::set<Language> languages_;
  std::vector<std::string> warnings_;
  size_t event_count_ = 0;
};

}  // namespace chronoglot

#endif  // CHRONOGLOT_EVENT_STORE_H_
