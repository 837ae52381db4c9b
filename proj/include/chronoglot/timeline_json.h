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

#ifndef CHRONOGLOT_TIMELINE_JSON_H_
#define CHRONOGLOT_TIMELINE_JSON_H_

#include <string>

#include "json.hpp"

#include "chronoglot/relevance.h"
#include "chronoglot/timeline.h"

namespace chronoglot {

// Field order is fixed, so equal documents serialize to identical bytes.
nlohmann::ordered_json ScoreToJson(const LanguageScore &score);
nlohmann::ordered_json ToJson(const TimelineDocument &document);

// One line per entry: begin, end, id, label, overallRelevance and the
// criterion score per queried language. Preceded by a '#' header line.
std::string ToTsv(const TimelineDocument &document);

}  // namespace chronoglot

#endif  // CHRONOGLOT_TIMELINE_JSON_H_
