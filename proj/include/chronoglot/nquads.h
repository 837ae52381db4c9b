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

#ifndef CHRONOGLOT_NQUADS_H_
#define CHRONOGLOT_NQUADS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chronoglot/language.h"

namespace chronoglot {

// Object position of a statement: an IRI or a literal. A literal carries at
// most one of {language tag, datatype IRI}.
struct ObjectTerm {
  enum class Kind { kIri, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;
  std::string language;
  std::string datatype;

  static ObjectTerm Iri(std::string iri) {
    return {Kind::kIri, std::move(iri), {}, {}};
  }
  static ObjectTerm Literal(std::string lexical, std::string language = {},
                            std::string datatype = {}) {
    return {Kind::kLiteral, std::move(lexical), std::move(language),
            std::move(datatype)};
  }

  bool is_iri() const { return kind == Kind::kIri; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  bool operator==(const ObjectTerm &) const = default;
};

// One statement of a dump.
struct Quad {
  std::string subject;
  std::string predicate;
  ObjectTerm object;
  std::optional<std::string> graph;

  bool operator==(const Quad &) const = default;
};

// A malformed statement. Carries the 1-based line number and the 0-based
// byte offset within the line where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line_no, size_t offset, std::string reason);

  size_t line_no() const { return line_no_; }
  size_t offset() const { return offset_; }
  const std::string &reason() const { return reason_; }

 private:
  size_t line_no_;
  size_t offset_;
  std::string reason_;
};

// Parses one physical line (without the newline) of the N-Quads subset
//   <s> <p> (<o> | "lit"[@lang | ^^<dt>]) [<g>] .
// Returns nullopt for blank and '#' comment lines. Throws ParseError.
std::optional<Quad> ParseNQuadLine(std::string_view line, size_t line_no);

// Serializes a quad as one line (no trailing newline) that ParseNQuadLine
// reads back to an equal Quad.
std::string FormatNQuad(const Quad &quad);

// True for an absolute IRI, i.e. one with a scheme separator.
bool IsAbsoluteIri(std::string_view iri);

inline constexpr std::string_view kDefaultGraphPrefix =
    "http://eventKG.l3s.uni-hannover.de/graph/";

// Maps a named graph to its language context: the final path segment when
// the graph starts with graph_prefix and the segment is a valid code.
std::optional<Language> LanguageOfGraph(const std::optional<std::string> &graph,
                                        std::string_view graph_prefix);

// Returns a language from a literal tag such as "en" or "en-GB".
std::optional<Language> LanguageOfTag(std::string_view tag);

}  // namespace chronoglot

#endif  // CHRONOGLOT_NQUADS_H_
