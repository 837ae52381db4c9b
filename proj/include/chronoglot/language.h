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

#ifndef CHRONOGLOT_LANGUAGE_H_
#define CHRONOGLOT_LANGUAGE_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chronoglot {

// A language context: one language edition's view of the graph, identified
// by a lowercase two-letter code.
class Language {
 public:
  // Returns nullopt unless code matches [a-z]{2}.
  static std::optional<Language> FromCode(std::string_view code);

  // Like FromCode but throws std::invalid_argument.
  static Language Of(std::string_view code);

  std::string code() const { return std::string(code_.data(), 2); }

  auto operator<=>(const Language &) const = default;

 private:
  explicit Language(std::array<char, 2> code) : code_(code) {}

  std::array<char, 2> code_;
};

// Parses a comma-separated list such as "en,de,fr". Duplicates are dropped
// keeping the first occurrence. Throws std::invalid_argument on a bad code.
std::vector<Language> ParseLanguageList(std::string_view text);

}  // namespace chronoglot

#endif  // CHRONOGLOT_LANGUAGE_H_
