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

#include "chronoglot/raw_graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

namespace chronoglot {
namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kSem = "http://semanticweb.cs.vu.nl/2009/11/sem/";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

std::string Concat(std::string_view a, std::string_view b) {
  std::string out(a);
  out += b;
  return out;
}

const std::string &RequireIri(const Quad &quad, size_t line_no) {
  if (!quad.object.is_iri()) {
    throw ParseError(line_no, 0, "<" + quad.predicate + "> expects an IRI object");
  }
  return quad.object.value;
}

Date RequireDate(const Quad &quad, size_t line_no) {
  std::optional<Date> date;
  if (quad.object.is_literal()) date = ParseTimestamp(quad.object.value);
  if (!date) {
    throw ParseError(line_no, 0, "invalid timestamp '" + quad.object.value + "'");
  }
  return *date;
}

uint64_t RequireCount(const Quad &quad, size_t line_no) {
  const std::string &text = quad.object.value;
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (!quad.object.is_literal() || text.empty() || ec != std::errc() ||
      ptr != text.data() + text.size()) {
    throw ParseError(line_no, 0, "invalid count '" + text + "'");
  }
  return value;
}

}  // namespace

Vocabulary::Vocabulary(std::string schema_ns, std::string prefix)
    : schema_namespace(std::move(schema_ns)),
      graph_prefix(std::move(prefix)),
      rdf_type(Concat(kRdf, "type")),
      rdf_subject(Concat(kRdf, "subject")),
      rdf_object(Concat(kRdf, "object")),
      rdfs_label(Concat(kRdfs, "label")),
      begin_timestamp(Concat(kSem, "hasBeginTimeStamp")),
      end_timestamp(Concat(kSem, "hasEndTimeStamp")),
      role_type(Concat(kSem, "roleType")),
      event_class(schema_namespace + "Event"),
      links(schema_namespace + "links"),
      mentions(schema_namespace + "mentions") {}

RawGraph::RawGraph(Vocabulary vocabulary) : vocabulary_(std::move(vocabulary)) {}

void RawGraph::Add(const Quad &quad, size_t line_no) {
  ++quad_count;
  const Vocabulary &v = vocabulary_;
  const std::string &p = quad.predicate;
  const std::string &s = quad.subject;

  if (p == v.rdf_type) {
    types[s].insert(RequireIri(quad, line_no));
  } else if (p == v.rdfs_label) {
    if (!quad.object.is_literal()) {
      throw ParseError(line_no, 0, "label must be a literal");
    }
    auto language = LanguageOfGraph(quad.graph, v.graph_prefix);
    if (!language) language = LanguageOfTag(quad.object.language);
    if (!language) {
      ++unattributed;
      return;
    }
    labels[s][*language].insert(quad.object.value);
  } else if (p == v.begin_timestamp) {
    begin_dates[s].insert(RequireDate(quad, line_no));
  } else if (p == v.end_timestamp) {
    end_dates[s].insert(RequireDate(quad, line_no));
  } else if (p == v.rdf_subject) {
    relation_subjects[s].insert(RequireIri(quad, line_no));
  } else if (p == v.rdf_object) {
    relation_objects[s].insert(RequireIri(quad, line_no));
  } else if (p == v.role_type) {
    role_types[s].insert(RequireIri(quad, line_no));
  } else if (p == v.links || p == v.mentions) {
    uint64_t count = RequireCount(quad, line_no);
    auto language = LanguageOfGraph(quad.graph, v.graph_prefix);
    if (!language) {
      ++unattributed;
      return;
    }
    Statistic statistic = p == v.links ? Statistic::kLinks : Statistic::kMentions;
    statistics[StatisticKey{s, statistic, *language}].insert(count);
  } else {
    ++unknown_predicates;
  }
}

std::vector<Quad> RawGraph::RecognizedQuads() const {
  const Vocabulary &v = vocabulary_;
  const std::string xsd_date = Concat(kXsd, "date");
  const std::string xsd_count = Concat(kXsd, "nonNegativeInteger");
  std::vector<Quad> out;
  auto add_iris = [&](const std::map<std::string, std::set<std::string>> &index,
                      const std::string &predicate) {
    for (const auto &[subject, objects] : index) {
      for (const auto &object : objects) {
        out.push_back({subject, predicate, ObjectTerm::Iri(object), std::nullopt});
      }
    }
  };
  auto add_dates = [&](const std::map<std::string, std::set<Date>> &index,
                       const std::string &predicate) {
    for (const auto &[subject, dates] : index) {
      for (const auto &date : dates) {
        out.push_back({subject, predicate,
                       ObjectTerm::Literal(date.ToString(), {}, xsd_date),
                       std::nullopt});
      }
    }
  };
  add_iris(types, v.rdf_type);
  add_iris(relation_subjects, v.rdf_subject);
  add_iris(relation_objects, v.rdf_object);
  add_iris(role_types, v.role_type);
  add_dates(begin_dates, v.begin_timestamp);
  add_dates(end_dates, v.end_timestamp);
  for (const auto &[subject, by_language] : labels) {
    for (const auto &[language, texts] : by_language) {
      for (const auto &text : texts) {
        out.push_back({subject, v.rdfs_label,
                       ObjectTerm::Literal(text, language.code()),
                       v.GraphFor(language)});
      }
    }
  }
  for (const auto &[key, values] : statistics) {
    const std::string &predicate =
        key.statistic == Statistic::kLinks ? v.links : v.mentions;
    for (uint64_t value : values) {
      out.push_back({key.subject, predicate,
                     ObjectTerm::Literal(std::to_string(value), {}, xsd_count),
                     v.GraphFor(key.language)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Quad &a, const Quad &b) {
    return std::tie(a.subject, a.predicate, a.object.value, a.object.language,
                    a.graph) < std::tie(b.subject, b.predicate, b.object.value,
                                        b.object.language, b.graph);
  });
  return out;
}

bool RawGraph::operator==(const RawGraph &other) const {
  return types == other.types && labels == other.labels &&
         begin_dates == other.begin_dates && end_dates == other.end_dates &&
         relation_subjects == other.relation_subjects &&
         relation_objects == other.relation_objects &&
         role_types == other.role_types && statistics == other.statistics;
}

DumpAborted::DumpAborted(std::vector<ParseError> errors)
    : std::runtime_error("dump aborted after " + std::to_string(errors.size()) +
                         " parse errors"),
      errors_(std::move(errors)) {}

DumpIoError::DumpIoError(const std::string &what, uint64_t byte_offset)
    : std::runtime_error(what + " at byte " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

RawGraph LoadDump(std::istream &source, const LoadOptions &options) {
  RawGraph graph(options.vocabulary);
  std::string line;
  size_t line_no = 0;
  uint64_t offset = 0;
  while (std::getline(source, line)) {
    ++line_no;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      if (auto quad = ParseNQuadLine(line, line_no)) graph.Add(*quad, line_no);
    } catch (const ParseError &error) {
      graph.errors.push_back(error);
      if (graph.errors.size() > options.error_cap) {
        throw DumpAborted(std::move(graph.errors));
      }
    }
  }
  if (source.bad()) throw DumpIoError("read failure", offset);
  return graph;
}

RawGraph LoadDumpFile(const std::filesystem::path &path,
                      const LoadOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DumpIoError("cannot open " + path.string(), 0);
  return LoadDump(in, options);
}

void WriteDump(const RawGraph &graph, std::ostream &out) {
  for (const Quad &quad : graph.RecognizedQuads()) {
    out << FormatNQuad(quad) << '\n';
  }
}

}  // namespace chronoglot
