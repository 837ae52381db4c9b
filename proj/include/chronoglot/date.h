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

#ifndef CHRONOGLOT_DATE_H_
#define CHRONOGLOT_DATE_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace chronoglot {

// Calendar date at day granularity. Years may be negative (BCE events).
struct Date {
  int year = 1;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date &) const = default;

  // Formats as YYYY-MM-DD (with a leading '-' for negative years).
  std::string ToString() const;

  // Parses YYYY-MM-DD exactly.
  static std::optional<Date> Parse(std::string_view text);
};

int DaysInMonth(int year, int month);

// Accepts YYYY-MM-DD or YYYY-MM-DDThh:mm:ss[Z] and truncates to the date.
std::optional<Date> ParseTimestamp(std::string_view text);

// Window bounds accept YYYY, YYYY-MM or YYYY-MM-DD. The start of a window
// expands to the first day of the period, the end to the last day.
std::optional<Date> ParseWindowStart(std::string_view text);
std::optional<Date> ParseWindowEnd(std::string_view text);

// Existence time of a node. An absent end means a point in time.
struct TimeSpan {
  Date begin;
  std::optional<Date> end;

  bool operator==(const TimeSpan &) const = default;
};

}  // namespace chronoglot

#endif  // CHRONOGLOT_DATE_H_
