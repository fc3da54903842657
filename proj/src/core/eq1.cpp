#include "eq1.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace infl::econo {

namespace {

WeeklySeries weekly_average(const std::vector<std::pair<Date, double>>& values) {
  std::map<Date, std::pair<double, std::size_t>> acc;
  for (const auto& [d, v] : values) {
    auto& [sum, n] = acc[iso_week_start(d)];
    sum += v;
    ++n;
  }
  WeeklySeries out;
  for (const auto& [week, a] : acc) out[week] = a.first / static_cast<double>(a.second);
  return out;
}

std::optional<double> lookup(const WeeklySeries& s, Date week) {
  auto it = s.find(week);
  if (it == s.end()) return std::nullopt;
  return it->second;
}

}  // namespace

WeeklySeries weekly_breakeven(const corpus::BreakEvenSeries& series) {
  std::vector<std::pair<Date, double>> values;
  values.reserve(series.points.size());
  for (const auto& p : series.points) values.emplace_back(p.date, p.rate.value());
  return weekly_average(values);
}

WeeklySeries weekly_sentiment(const std::vector<sentiment::WeeklyPoint>& points) {
  WeeklySeries out;
  for (const auto& p : points) out[p.week_start] = p.mean;
  return out;
}

WeeklySeries log_trend(const corpus::TrendSeries& series) {
  WeeklySeries out;
  for (const auto& p : series.points) {
    out[iso_week_start(p.week_start)] = std::log(std::max(static_cast<double>(p.value), 1.0));
  }
  return out;
}

Eq1Inputs make_eq1_inputs(const corpus::BreakEvenSeries& infl,
                          const std::vector<corpus::TrendSeries>& trends, Region trend_region,
                          const std::vector<sentiment::WeeklyPoint>& senti) {
  Eq1Inputs in;
  in.infl = weekly_breakeven(infl);
  in.senti = weekly_sentiment(senti);
  auto pick = [&](corpus::TrendGroup g) {
    for (const auto& s : trends) {
      if (s.group == g && s.region == trend_region) return log_trend(s);
    }
    fail(ErrorCode::invalid_argument, "no " + std::string(corpus::trend_group_name(g)) +
                                          " trend series for region " +
                                          std::string(region_name(trend_region)));
  };
  in.defl_trend = pick(corpus::TrendGroup::deflation);
  in.infl_trend = pick(corpus::TrendGroup::inflation);
  in.neu_trend = pick(corpus::TrendGroup::neutral);
  return in;
}

Eq1Design build_eq1(const Eq1Inputs& in, bool with_exog, const std::optional<DateRange>& range) {
  using std::chrono::days;
  Eq1Design out;
  auto& d = out.design;
  d.response = "infl";
  d.columns = {"const"};
  if (with_exog) d.columns.insert(d.columns.end(), {"Defl", "Infl", "Neu", "Senti"});
  d.columns.insert(d.columns.end(), {"L(1)", "L(2)"});

  std::vector<double> row;
  for (const auto& [week, y] : in.infl) {
    if (range && !range->contains(week)) continue;
    const Date w1 = week - days{7};
    const Date w2 = week - days{14};
    auto l1 = lookup(in.infl, w1);
    auto l2 = lookup(in.infl, w2);
    row.assign({1.0});
    bool complete = l1 && l2;
    if (with_exog && complete) {
      for (const WeeklySeries* s : {&in.defl_trend, &in.infl_trend, &in.neu_trend, &in.senti}) {
        auto v = lookup(*s, w1);
        if (!v) {
          complete = false;
          break;
        }
        row.push_back(*v);
      }
    }
    if (!complete) {
      ++out.dropped;
      continue;
    }
    row.push_back(*l1);
    row.push_back(*l2);
    d.add_row(row, y);
    out.weeks.push_back(week);
  }
  if (d.rows() < kMinEq1Rows) {
    fail(ErrorCode::invalid_argument, "eq1: insufficient overlap (" + std::to_string(d.rows()) +
                                          " complete weeks, need " + std::to_string(kMinEq1Rows) +
                                          ")");
  }
  return out;
}

Eq1Pair run_eq1(const Eq1Inputs& in, const std::optional<DateRange>& range) {
  const auto full = build_eq1(in, true, range);
  // same rows, AR columns only
  Design ar;
  ar.response = full.design.response;
  ar.columns = {"const", "L(1)", "L(2)"};
  const std::size_t k = full.design.cols();
  for (std::size_t r = 0; r < full.design.rows(); ++r) {
    ar.add_row({1.0, full.design.at(r, k - 2), full.design.at(r, k - 1)}, full.design.y[r]);
  }
  return {ols(ar), ols(full.design), full.dropped};
}

}  // namespace infl::econo
