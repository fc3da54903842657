#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace infl {

using Date = std::chrono::sys_days;
using Timestamp = std::chrono::sys_seconds;

// Half-open [begin, end).
struct DateRange {
  Date begin;
  Date end;

  [[nodiscard]] bool contains(Date d) const { return begin <= d && d < end; }
};

[[nodiscard]] Date make_date(int y, unsigned m, unsigned d);

// YYYY-MM-DD
[[nodiscard]] std::optional<Date> parse_date(std::string_view s);
// YYYY-MM-DD, YYYY-MM-DDTHH:MM:SS with optional fraction and Z / +hh:mm / -hh:mm
// offset, or a bare date (midnight UTC). Result is normalized to UTC.
[[nodiscard]] std::optional<Timestamp> parse_timestamp(std::string_view s);

[[nodiscard]] std::string format_date(Date d);
[[nodiscard]] std::string format_timestamp(Timestamp t);

[[nodiscard]] Date day_of(Timestamp t);
[[nodiscard]] int year_of(Date d);
// Monday starting the ISO week that contains d.
[[nodiscard]] Date iso_week_start(Date d);

// "2017-01-01..2020-01-01"
[[nodiscard]] std::optional<DateRange> parse_date_range(std::string_view s);

}  // namespace infl
