#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dates.hpp"

namespace infl {

// ALL is only used as a filter / aggregate scope ("global"); no tweet carries it.
enum class Region { US, GB, EU, CA, ASIA, OTHER, UNKNOWN, ALL };

[[nodiscard]] std::string_view region_name(Region r);
// Accepts the enum names case-insensitively plus the aliases UK (GB) and GLOBAL (ALL).
[[nodiscard]] std::optional<Region> parse_region_code(std::string_view s);

enum class Sentiment : int { negative = -1, neutral = 0, positive = 1 };

inline constexpr Sentiment kClasses[3] = {Sentiment::negative, Sentiment::neutral,
                                          Sentiment::positive};

[[nodiscard]] constexpr int class_index(Sentiment s) { return static_cast<int>(s) + 1; }
[[nodiscard]] constexpr Sentiment class_at(int idx) { return static_cast<Sentiment>(idx - 1); }
[[nodiscard]] std::optional<Sentiment> parse_sentiment(std::string_view s);

}  // namespace infl

namespace infl::corpus {

struct Tweet {
  std::string id;
  Timestamp created_at;
  std::string text;
  Region region = Region::UNKNOWN;
};

// Free-text location tag (lowercased) -> region.
using RegionMap = std::map<std::string, Region>;

[[nodiscard]] RegionMap default_region_map();
// CSV with header location,region.
[[nodiscard]] RegionMap load_region_map(const std::string& path);
[[nodiscard]] Region resolve_region(std::string_view tag, const RegionMap& map);

// Records outside `window` are dropped; the rest are sorted by created_at
// (stable, so equal timestamps keep file order).
[[nodiscard]] std::vector<Tweet> load_tweets(const std::string& path, const DateRange& window,
                                             const RegionMap& regions = default_region_map());
[[nodiscard]] std::vector<Tweet> parse_tweets(std::string_view jsonl, const DateRange& window,
                                              const RegionMap& regions = default_region_map());

struct KeywordDictionary {
  std::set<std::string> price_terms;
  std::set<std::string> inflation_terms;
  std::set<std::string> deflation_terms;

  // Throws if any set contains an empty phrase or the sets overlap.
  void validate() const;
  [[nodiscard]] bool empty() const;
};

// Search-trend keyword groups. Informational: trend series arrive already
// aggregated per group, so these are carried into reports only.
struct TrendKeywords {
  std::set<std::string> inflation;
  std::set<std::string> neutral;
  std::set<std::string> deflation;
};

[[nodiscard]] KeywordDictionary default_dictionary();
[[nodiscard]] TrendKeywords default_trend_keywords();

// INI-style file with sections [price] [inflation] [deflation] and optional
// [trend.inflation] [trend.neutral] [trend.deflation]; one phrase per line.
struct KeywordConfig {
  KeywordDictionary dictionary;
  TrendKeywords trends;
};
[[nodiscard]] KeywordConfig load_keyword_config(const std::string& path);

[[nodiscard]] bool matches_keywords(std::string_view text, const KeywordDictionary& dict);
[[nodiscard]] std::vector<Tweet> keyword_filter(const std::vector<Tweet>& tweets,
                                                const KeywordDictionary& dict);

// ---- labeled training texts ----------------------------------------------

struct LabeledText {
  std::string text;
  Sentiment label;
};

// CSV with header text,label; labels outside {-1,0,1} are rejected.
[[nodiscard]] std::vector<LabeledText> load_labels(const std::string& path);

// ---- search trends -------------------------------------------------------

enum class TrendGroup { inflation, neutral, deflation };
[[nodiscard]] std::string_view trend_group_name(TrendGroup g);

struct TrendPoint {
  Date week_start;
  int value;  // 0..100
};

struct TrendSeries {
  TrendGroup group;
  Region region;
  std::vector<TrendPoint> points;
};

// CSV with header date,region,group,value. One series per (group, region),
// ordered by group then region. Dates must be strictly increasing with
// 7-day spacing inside each series.
[[nodiscard]] std::vector<TrendSeries> load_trends(const std::string& path);

// ---- yields and break-even inflation ---------------------------------------

// A percentage held as an exact decimal with six fractional digits, so that
// nominal - real + real == nominal holds without rounding.
struct Percent {
  static constexpr std::int64_t kScale = 1'000'000;
  std::int64_t units = 0;

  [[nodiscard]] double value() const { return static_cast<double>(units) / kScale; }
  [[nodiscard]] std::string str() const;
  friend Percent operator-(Percent a, Percent b) { return {a.units - b.units}; }
  friend Percent operator+(Percent a, Percent b) { return {a.units + b.units}; }
  friend bool operator==(Percent a, Percent b) = default;
};

// Plain decimal ("-0.45", "+1.5", "2"); at most six fractional digits.
[[nodiscard]] std::optional<Percent> parse_percent(std::string_view s);

struct YieldPoint {
  Date date;
  Percent nominal;
  Percent real;
};

struct YieldSeries {
  Region region;  // US or GB
  std::vector<YieldPoint> points;
};

struct RatePoint {
  Date date;
  Percent rate;
};

struct BreakEvenSeries {
  Region region;
  std::vector<RatePoint> points;
};

// CSV with header date,nominal,real.
[[nodiscard]] YieldSeries load_yields(const std::string& path, Region region);

[[nodiscard]] BreakEvenSeries breakeven(const YieldSeries& y);

struct YearSummary {
  int year;
  std::size_t n;
  double mean;
  std::optional<double> std;  // absent for single-point years
};

[[nodiscard]] std::vector<YearSummary> summarize_by_year(const BreakEvenSeries& series);
[[nodiscard]] std::string render_year_table(const std::vector<YearSummary>& rows,
                                            std::string_view label);

}  // namespace infl::corpus
