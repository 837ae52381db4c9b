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

#include "chronoglot/nquads.h"

#include <cctype>
#include <cstdint>

namespace chronoglot {
namespace {

void AppendUtf8(std::string &out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Returns the length of a valid UTF-8 sequence starting at pos, or 0.
size_t Utf8SequenceLength(std::string_view text, size_t pos) {
  auto byte = [&](size_t i) { return static_cast<unsigned char>(text[i]); };
  unsigned char lead = byte(pos);
  size_t length;
  uint32_t cp;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    cp = lead & 0x07;
  } else {
    return 0;
  }
  if (pos + length > text.size()) return 0;
  for (size_t i = 1; i < length; ++i) {
    if ((byte(pos + i) & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte(pos + i) & 0x3F);
  }
  static constexpr uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[length] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return length;
}

class LineParser {
 public:
  LineParser(std::string_view line, size_t line_no)
      : line_(line), line_no_(line_no) {}

  std::optional<Quad> Parse() {
    SkipSpace();
    if (AtEnd() || Peek() == '#') return std::nullopt;
    ValidateUtf8();

    Quad quad;
    quad.subject = ParseSubjectOrPredicate("subject");
    SkipSpace();
    quad.predicate = ParseSubjectOrPredicate("predicate");
    SkipSpace();
    quad.object = ParseObject();
    SkipSpace();
    if (!AtEnd() && Peek() == '<') {
      quad.graph = ParseIri();
      SkipSpace();
    }
    if (AtEnd() || Peek() != '.') Fail("missing final '.'");
    ++pos_;
    SkipSpace();
    if (!AtEnd() && Peek() != '#') Fail("unexpected content after final '.'");
    return quad;
  }

 private:
  bool AtEnd() const { return pos_ >= line_.size(); }
  char Peek() const { return line_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t')) ++pos_;
  }

  [[noreturn]] void Fail(const std::string &reason) const {
    throw ParseError(line_no_, pos_, reason);
  }

  void ValidateUtf8() {
    size_t saved = pos_;
    for (size_t i = 0; i < line_.size();) {
      size_t length = Utf8SequenceLength(line_, i);
      if (length == 0) {
        pos_ = i;
        Fail("invalid UTF-8");
      }
      i += length;
    }
    pos_ = saved;
  }

  std::string ParseSubjectOrPredicate(const char *what) {
    if (AtEnd()) Fail(std::string("missing ") + what);
    if (Peek() == '_') Fail("blank nodes are not supported");
    if (Peek() != '<') Fail(std::string(what) + " must be an IRI");
    size_t start = pos_;
    std::string iri = ParseIri();
    if (!IsAbsoluteIri(iri)) {
      pos_ = start;
      Fail(std::string(what) + " is not an absolute IRI");
    }
    return iri;
  }

  ObjectTerm ParseObject() {
    if (AtEnd()) Fail("missing object");
    if (Peek() == '<') return ObjectTerm::Iri(ParseIri());
    if (Peek() == '"') return ParseLiteral();
    if (Peek() == '_') Fail("blank nodes are not supported");
    Fail("object must be an IRI or a literal");
  }

  std::string ParseIri() {
    ++pos_;  // '<'
    std::string iri;
    while (true) {
      if (AtEnd()) Fail("unterminated IRI");
      char c = Peek();
      if (c == '>') {
        ++pos_;
        return iri;
      }
      if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`' ||
          static_cast<unsigned char>(c) <= 0x20) {
        Fail("invalid character in IRI");
      }
      if (c == '\\') {
        ParseUnicodeEscape(iri);
        continue;
      }
      iri += c;
      ++pos_;
    }
  }

  // Handles \uXXXX and \UXXXXXXXX at pos_ (which points at the backslash).
  void ParseUnicodeEscape(std::string &out) {
    if (pos_ + 1 >= line_.size()) Fail("dangling escape");
    char kind = line_[pos_ + 1];
    size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (digits == 0) Fail("invalid escape sequence");
    if (pos_ + 2 + digits > line_.size()) Fail("truncated unicode escape");
    uint32_t cp = 0;
    for (size_t i = 0; i < digits; ++i) {
      int v = HexValue(line_[pos_ + 2 + i]);
      if (v < 0) Fail("invalid hex digit in unicode escape");
      cp = (cp << 4) | static_cast<uint32_t>(v);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      Fail("escape is not a unicode scalar value");
    }
    AppendUtf8(out, cp);
    pos_ += 2 + digits;
  }

  ObjectTerm ParseLiteral() {
    size_t start = pos_;
    ++pos_;  // opening quote
    std::string lexical;
    while (true) {
      if (AtEnd()) {
        pos_ = start;
        Fail("unterminated literal");
      }
      char c = Peek();
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c != '\\') {
        lexical += c;
        ++pos_;
        continue;
      }
      if (pos_ + 1 >= line_.size()) {
        pos_ = start;
        Fail("unterminated literal");
      }
      char escaped = line_[pos_ + 1];
      switch (escaped) {
        case '"': lexical += '"'; break;
        case '\\': lexical += '\\'; break;
        case '\'': lexical += '\''; break;
        case 'n': lexical += '\n'; break;
        case 't': lexical += '\t'; break;
        case 'r': lexical += '\r'; break;
        case 'b': lexical += '\b'; break;
        case 'f': lexical += '\f'; break;
        case 'u':
        case 'U':
          ParseUnicodeEscape(lexical);
          continue;
        default:
          Fail("invalid escape sequence");
      }
      pos_ += 2;
    }
    if (!AtEnd() && Peek() == '@') {
      ++pos_;
      size_t tag_start = pos_;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                          Peek() == '-')) {
        ++pos_;
      }
      std::string tag(line_.substr(tag_start, pos_ - tag_start));
      if (tag.empty() || !std::isalpha(static_cast<unsigned char>(tag[0]))) {
        Fail("invalid language tag");
      }
      return ObjectTerm::Literal(std::move(lexical), std::move(tag));
    }
    if (!AtEnd() && Peek() == '^') {
      if (pos_ + 2 >= line_.size() || line_[pos_ + 1] != '^' ||
          line_[pos_ + 2] != '<') {
        Fail("malformed datatype");
      }
      pos_ += 2;
      std::string datatype = ParseIri();
      return ObjectTerm::Literal(std::move(lexical), {}, std::move(datatype));
    }
    return ObjectTerm::Literal(std::move(lexical));
  }

  std::string_view line_;
  size_t line_no_;
  size_t pos_ = 0;
};

void AppendEscapedLiteral(std::string &out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
}

}  // namespace

ParseError::ParseError(size_t line_no, size_t offset, std::string reason)
    : std::runtime_error("line " + std::to_string(line_no) + ", offset " +
                         std::to_string(offset) + ": " + reason),
      line_no_(line_no),
      offset_(offset),
      reason_(std::move(reason)) {}

std::optional<Quad> ParseNQuadLine(std::string_view line, size_t line_no) {
  return LineParser(line, line_no).Parse();
}

std::string FormatNQuad(const Quad &quad) {
  std::string out;
  out.reserve(quad.subject.size() + quad.predicate.size() +
              quad.object.value.size() + 32);
  out += '<';
  out += quad.subject;
  out += "> <";
  out += quad.predicate;
  out += "> ";
  if (quad.object.is_iri()) {
    out += '<';
    out += quad.object.value;
    out += '>';
  } else {
    out += '"';
    AppendEscapedLiteral(out, quad.object.value);
    out += '"';
    if (!quad.object.language.empty()) {
      out += '@';
      out += quad.object.language;
    } else if (!quad.object.datatype.empty()) {
      out += "^^<";
      out += quad.object.datatype;
      out += '>';
    }
  }
  if (quad.graph) {
    out += " <";
    out += *quad.graph;
    out += '>';
  }
  out += " .";
  return out;
}

bool IsAbsoluteIri(std::string_view iri) {
  size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return true;
}

std::optional<Language> LanguageOfGraph(const std::optional<std::string> &graph,
                                        std::string_view graph_prefix) {
  if (!graph || !graph->starts_with(graph_prefix)) return std::nullopt;
  std::string_view segment = std::string_view(*graph).substr(graph_prefix.size());
  if (segment.find('/') != std::string_view::npos) return std::nullopt;
  return Language::FromCode(segment);
}

std::optional<Language> LanguageOfTag(std::string_view tag) {
  std::string primary(tag.substr(0, tag.find('-')));
  for (char &c : primary) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return Language::FromCode(primary);
}

}  // namespace chronoglot
