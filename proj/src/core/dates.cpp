#include "dates.hpp"

#include <cstdio>

#include "util.hpp"

namespace infl {

using namespace std::chrono;

namespace {

bool digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

std::optional<Date> parse_date_prefix(std::string_view s) {
  int y, m, d;
  if (s.size() < 10 || !digits(s, 0, 4, y) || s[4] != '-' || !digits(s, 5, 2, m) || s[7] != '-' ||
      !digits(s, 8, 2, d)) {
    return std::nullopt;
  }
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

}  // namespace

Date make_date(int y, unsigned m, unsigned d) { return sys_days{year{y} / month{m} / day{d}}; }

std::optional<Date> parse_date(std::string_view s) {
  s = trim(s);
  if (s.size() != 10) return std::nullopt;
  return parse_date_prefix(s);
}

std::optional<Timestamp> parse_timestamp(std::string_view s) {
  s = trim(s);
  auto date = parse_date_prefix(s);
  if (!date) return std::nullopt;
  if (s.size() == 10) return Timestamp{*date};
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  int hh, mm, ss = 0;
  if (!digits(s, 11, 2, hh) || s.size() < 16 || s[13] != ':' || !digits(s, 14, 2, mm)) {
    return std::nullopt;
  }
  std::size_t pos = 16;
  if (pos < s.size() && s[pos] == ':') {
    if (!digits(s, pos + 1, 2, ss)) return std::nullopt;
    pos += 3;
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) return std::nullopt;
  }
  int offset_min = 0;
  if (pos < s.size()) {
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int oh, om = 0;
      if (!digits(s, pos + 1, 2, oh)) return std::nullopt;
      std::size_t p = pos + 3;
      if (p < s.size() && s[p] == ':') ++p;
      if (p < s.size()) {
        if (!digits(s, p, 2, om)) return std::nullopt;
        p += 2;
      }
      offset_min = (oh * 60 + om) * (c == '+' ? 1 : -1);
      pos = p;
    } else {
      return std::nullopt;
    }
  }
  if (pos != s.size()) return std::nullopt;
  return Timestamp{*date} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_min};
}

std::string format_date(Date d) {
  year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string format_timestamp(Timestamp t) {
  Date d = day_of(t);
  hh_mm_ss hms{t - d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "T%02d:%02d:%02dZ", static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count()));
  return format_date(d) + buf;
}

Date day_of(Timestamp t) { return floor<days>(t); }

int year_of(Date d) { return static_cast<int>(year_month_day{d}.year()); }

Date iso_week_start(Date d) {
  unsigned iso = weekday{d}.iso_encoding();  // Monday = 1
  return d - days{iso - 1};
}

std::optional<DateRange> parse_date_range(std::string_view s) {
  auto sep = s.find("..");
  if (sep == std::string_view::npos) return std::nullopt;
  auto b = parse_date(s.substr(0, sep));
  auto e = parse_date(s.substr(sep + 2));
  if (!b || !e || !(*b < *e)) return std::nullopt;
  return DateRange{*b, *e};
}

}  // namespace infl
