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

#include "chronoglot/date.h"

#include <charconv>
#include <cstdio>

namespace chronoglot {
namespace {

bool IsLeap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

// Parses an optionally negative year of at least four digits. Advances pos.
std::optional<int> ParseYear(std::string_view text, size_t &pos) {
  size_t start = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  size_t digits = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos - digits < 4) return std::nullopt;
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, year);
  if (ec != std::errc() || ptr != text.data() + pos) return std::nullopt;
  return year;
}

std::optional<int> ParseTwoDigits(std::string_view text, size_t &pos) {
  if (pos + 2 > text.size()) return std::nullopt;
  char a = text[pos], b = text[pos + 1];
  if (a < '0' || a > '9' || b < '0' || b > '9') return std::nullopt;
  pos += 2;
  return (a - '0') * 10 + (b - '0');
}

struct PartialDate {
  int year;
  std::optional<int> month;
  std::optional<int> day;
  size_t consumed;
};

std::optional<PartialDate> ParsePartial(std::string_view text) {
  size_t pos = 0;
  auto year = ParseYear(text, pos);
  if (!year) return std::nullopt;
  PartialDate result{*year, std::nullopt, std::nullopt, pos};
  if (pos == text.size() || text[pos] != '-') return result;
  ++pos;
  auto month = ParseTwoDigits(text, pos);
  if (!month || *month < 1 || *month > 12) return std::nullopt;
  result.month = month;
  result.consumed = pos;
  if (pos == text.size() || text[pos] != '-') return result;
  ++pos;
  auto day = ParseTwoDigits(text, pos);
  if (!day || *day < 1 || *day > DaysInMonth(*year, *month)) return std::nullopt;
  result.day = day;
  result.consumed = pos;
  return result;
}

}  // namespace

int DaysInMonth(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && IsLeap(year)) return 29;
  return kDays[month - 1];
}

std::string Date::ToString() const {
  char buffer[32];
  if (year < 0) {
    std::snprintf(buffer, sizeof(buffer), "-%04d-%02d-%02d", -year, month, day);
  } else {
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", year, month, day);
  }
  return buffer;
}

std::optional<Date> Date::Parse(std::string_view text) {
  auto partial = ParsePartial(text);
  if (!partial || !partial->day || partial->consumed != text.size()) {
    return std::nullopt;
  }
  return Date{partial->year, *partial->month, *partial->day};
}

std::optional<Date> ParseTimestamp(std::string_view text) {
  auto partial = ParsePartial(text);
  if (!partial || !partial->day) return std::nullopt;
  Date date{partial->year, *partial->month, *partial->day};
  std::string_view rest = text.substr(partial->consumed);
  if (rest.empty()) return date;
  // Time of day: Thh:mm:ss with an optional trailing Z.
  if (rest.size() != 9 && rest.size() != 10) return std::nullopt;
  if (rest[0] != 'T' || rest[3] != ':' || rest[6] != ':') return std::nullopt;
  size_t pos = 1;
  auto h = ParseTwoDigits(rest, pos);
  pos = 4;
  auto m = ParseTwoDigits(rest, pos);
  pos = 7;
  auto s = ParseTwoDigits(rest, pos);
  if (!h || !m || !s || *h > 23 || *m > 59 || *s > 60) return std::nullopt;
  if (rest.size() == 10 && rest[9] != 'Z') return std::nullopt;
  return date;
}

std::optional<Date> ParseWindowStart(std::string_view text) {
  auto partial = ParsePartial(text);
  if (!partial || partial->consumed != text.size()) return std::nullopt;
  return Date{partial->year, partial->month.value_or(1), partial->day.value_or(1)};
}

std::optional<Date> ParseWindowEnd(std::string_view text) {
  auto partial = ParsePartial(text);
  if (!partial || partial->consumed != text.size()) return std::nullopt;
  int month = partial->month.value_or(12);
  int day = partial->day.value_or(DaysInMonth(partial->year, month));
  return Date{partial->year, month, day};
}

}  // namespace chronoglot
