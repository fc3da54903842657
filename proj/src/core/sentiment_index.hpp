#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "corpus.hpp"
#include "dates.hpp"

namespace infl::sentiment {

struct DailyIndexPoint {
  Date date;
  Region region = Region::ALL;
  std::size_t n = 0;
  double mean_score = 0.0;
  double sum_score = 0.0;
};

struct VolPoint {
  Date date;
  double vol = 0.0;
};

enum class PeriodName { before, during, after };
[[nodiscard]] std::string_view period_name(PeriodName p);

struct Period {
  PeriodName name;
  DateRange range;
};

// [2017-01-01, 2020-01-01), [2020-01-01, 2021-01-01), [2021-01-01, 2022-01-01)
[[nodiscard]] std::vector<Period> default_periods();
// Ordered before/during/after, non-empty, contiguous.
void validate_periods(const std::vector<Period>& periods);

inline constexpr std::size_t kVolWindow = 30;

// One point per day with at least max(min_n, 1) scored tweets of `region`
// (ALL keeps every tweet). Output is date-sorted.
[[nodiscard]] std::vector<DailyIndexPoint> build_daily_index(
    const std::vector<classify::ScoredTweet>& scores, const std::vector<corpus::Tweet>& tweets,
    Region region, std::size_t min_n = 1);

// Sample std of the trailing `window` sum_score observations; dates with
// fewer trailing observations are omitted.
[[nodiscard]] std::vector<VolPoint> rolling_vol(const std::vector<DailyIndexPoint>& points,
                                                std::size_t window = kVolWindow);

struct Segmented {
  std::vector<std::vector<DailyIndexPoint>> parts;  // parallel to the periods
  std::size_t dropped = 0;
};

[[nodiscard]] Segmented segment(const std::vector<DailyIndexPoint>& points,
                                const std::vector<Period>& periods);

struct WeeklyPoint {
  Date week_start;  // ISO Monday
  std::size_t n = 0;
  double mean = 0.0;
};

// Tweet-weighted mean of mean_score per ISO week.
[[nodiscard]] std::vector<WeeklyPoint> weekly_mean(const std::vector<DailyIndexPoint>& points);

struct Stats {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> std;
  double max = 0.0;
  double min = 0.0;
};

[[nodiscard]] Stats describe(const std::vector<double>& xs);

struct IndexSummary {
  Region region;
  Stats freq;
  Stats score;
  std::optional<Stats> vol;  // absent without any volatility point
};

[[nodiscard]] IndexSummary summarize_index(Region region, const std::vector<DailyIndexPoint>& points,
                                           const std::vector<VolPoint>& vols);
[[nodiscard]] std::string render_index_table(const std::vector<IndexSummary>& rows);

// date,region,n,mean_score,sum_score
[[nodiscard]] std::string index_to_csv(const std::vector<DailyIndexPoint>& points);
// date,region,vol30
[[nodiscard]] std::string vol_to_csv(Region region, const std::vector<VolPoint>& vols);

}  // namespace infl::sentiment
