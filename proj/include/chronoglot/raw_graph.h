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

#ifndef CHRONOGLOT_RAW_GRAPH_H_
#define CHRONOGLOT_RAW_GRAPH_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronoglot/date.h"
#include "chronoglot/language.h"
#include "chronoglot/nquads.h"

namespace chronoglot {

inline constexpr std::string_view kDefaultSchemaNamespace =
    "http://eventKG.l3s.uni-hannover.de/schema/";

// Absolute IRIs of the predicates and classes the loader recognizes.
struct Vocabulary {
  Vocabulary() : Vocabulary(std::string(kDefaultSchemaNamespace)) {}
  explicit Vocabulary(std::string schema_namespace,
                      std::string graph_prefix = std::string(kDefaultGraphPrefix));

  std::string schema_namespace;
  std::string graph_prefix;

  std::string rdf_type;
  std::string rdf_subject;
  std::string rdf_object;
  std::string rdfs_label;
  std::string begin_timestamp;
  std::string end_timestamp;
  std::string role_type;
  std::string event_class;
  std::string links;
  std::string mentions;

  std::string GraphFor(Language language) const {
    return graph_prefix + language.code();
  }
};

enum class Statistic { kLinks, kMentions };

struct StatisticKey {
  std::string subject;
  Statistic statistic;
  Language language;

  auto operator<=>(const StatisticKey &) const = default;
};

// Indexed, order-independent view of the recognized statements of a dump.
// Every index has set semantics, so duplicate and permuted input lines yield
// an equal graph. Language-indexed statements (labels, links, mentions) are
// attributed to exactly one language: the one named by their graph, or for
// labels without a language graph, the literal's language tag.
class RawGraph {
 public:
  explicit RawGraph(Vocabulary vocabulary = Vocabulary());

  // Indexes one statement. Unknown predicates are counted and ignored.
  // Throws ParseError (with line_no and offset 0) when a recognized
  // predicate carries an unusable object, e.g. a non-numeric links value.
  void Add(const Quad &quad, size_t line_no = 0);

  // Canonical statements reproducing this graph's indexes, sorted.
  std::vector<Quad> RecognizedQuads() const;

  const Vocabulary &vocabulary() const { return vocabulary_; }

  // Equality covers the indexes only, not counters or diagnostics.
  bool operator==(const RawGraph &other) const;

  std::map<std::string, std::set<std::string>> types;
  std::map<std::string, std::map<Language, std::set<std::string>>> labels;
  std::map<std::string, std::set<Date>> begin_dates;
  std::map<std::string, std::set<Date>> end_dates;
  std::map<std::string, std::set<std::string>> relation_subjects;
  std::map<std::string, std::set<std::string>> relation_objects;
  std::map<std::string, std::set<std::string>> role_types;
  std::map<StatisticKey, std::set<uint64_t>> statistics;

  // Nodes that must exist in a built store even without statements of their
  // own, e.g. the query entity of a remote fetch. Not part of equality.
  std::set<std::string> seed_nodes;

  // Statements parsed, including duplicates and unknown predicates.
  size_t quad_count = 0;
  size_t unknown_predicates = 0;
  // Recognized language-dependent statements without a language context.
  size_t unattributed = 0;
  // Malformed lines recorded while loading.
  std::vector<ParseError> errors;

 private:
  Vocabulary vocabulary_;
};

struct LoadOptions {
  Vocabulary vocabulary;
  size_t error_cap = 100;
};

// Thrown when a dump produces more than error_cap parse errors.
class DumpAborted : public std::runtime_error {
 public:
  explicit DumpAborted(std::vector<ParseError> errors);
  const std::vector<ParseError> &errors() const { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

// Thrown on a read failure; byte_offset is the position reached.
class DumpIoError : public std::runtime_error {
 public:
  DumpIoError(const std::string &what, uint64_t byte_offset);
  uint64_t byte_offset() const { return byte_offset_; }

 private:
  uint64_t byte_offset_;
};

RawGraph LoadDump(std::istream &source, const LoadOptions &options = {});
RawGraph LoadDumpFile(const std::filesystem::path &path,
                      const LoadOptions &options = {});

// Writes RecognizedQuads() one per line.
void WriteDump(const RawGraph &graph, std::ostream &out);

}  // namespace chronoglot

#endif  // CHRONOGLOT_RAW_GRAPH_H_
