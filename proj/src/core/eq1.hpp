#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ols.hpp"
#include "sentiment_index.hpp"

namespace infl::econo {

// Weekly series keyed by ISO Monday.
using WeeklySeries = std::map<Date, double>;

[[nodiscard]] WeeklySeries weekly_breakeven(const corpus::BreakEvenSeries& series);
[[nodiscard]] WeeklySeries weekly_sentiment(const std::vector<sentiment::WeeklyPoint>& points);
// ln(max(value, 1)) per week; trend dates are mapped onto their ISO Monday.
[[nodiscard]] WeeklySeries log_trend(const corpus::TrendSeries& series);

struct Eq1Inputs {
  WeeklySeries infl;
  WeeklySeries defl_trend;  // already logged
  WeeklySeries infl_trend;
  WeeklySeries neu_trend;
  WeeklySeries senti;
};

// Picks the region's three trend groups out of `trends`; a missing group is
// an error.
[[nodiscard]] Eq1Inputs make_eq1_inputs(const corpus::BreakEvenSeries& infl,
                                        const std::vector<corpus::TrendSeries>& trends,
                                        Region trend_region,
                                        const std::vector<sentiment::WeeklyPoint>& senti);

inline constexpr std::size_t kMinEq1Rows = 10;

struct Eq1Design {
  Design design;
  std::vector<Date> weeks;  // response week per row
  std::size_t dropped = 0;  // candidate weeks lacking a value
};

// Columns const, [Defl, Infl, Neu, Senti,] L(1), L(2). Lags are calendar
// weeks (t - 7 and t - 14 days). Weeks outside `range` (when given) are not
// candidates. Fewer than kMinEq1Rows complete rows is an error.
[[nodiscard]] Eq1Design build_eq1(const Eq1Inputs& in, bool with_exog,
                                  const std::optional<DateRange>& range = std::nullopt);

struct Eq1Pair {
  RegressionResult ar;
  RegressionResult exog;
  std::size_t dropped = 0;
};

// Both variants on the rows complete for the exogenous variant.
[[nodiscard]] Eq1Pair run_eq1(const Eq1Inputs& in, const std::optional<DateRange>& range = std::nullopt);

}  // namespace infl::econo
