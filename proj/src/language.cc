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

#include "chronoglot/language.h"

#include <algorithm>
#include <stdexcept>

namespace chronoglot {

std::optional<Language> Language::FromCode(std::string_view code) {
  if (code.size() != 2) return std::nullopt;
  for (char c : code) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  return Language({code[0], code[1]});
}

Language Language::Of(std::string_view code) {
  auto language = FromCode(code);
  if (!language) {
    throw std::invalid_argument("invalid language code: '" + std::string(code) + "'");
  }
  return *language;
}

std::vector<Language> ParseLanguageList(std::string_view text) {
  std::vector<Language> result;
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      Language language = Language::Of(item);
      if (std::find(result.begin(), result.end(), language) == result.end()) {
        result.push_back(language);
      }
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return result;
}

}  // namespace chronoglot
