#include "sentiment_index.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "error.hpp"
#include "util.hpp"

namespace infl::sentiment {

std::string_view period_name(PeriodName p) {
  switch (p) {
    case PeriodName::before: return "before";
    case PeriodName::during: return "during";
    case PeriodName::after: return "after";
  }
  return "before";
}

std::vector<Period> default_periods() {
  return {
      {PeriodName::before, {make_date(2017, 1, 1), make_date(2020, 1, 1)}},
      {PeriodName::during, {make_date(2020, 1, 1), make_date(2021, 1, 1)}},
      {PeriodName::after, {make_date(2021, 1, 1), make_date(2022, 1, 1)}},
  };
}

void validate_periods(const std::vector<Period>& periods) {
  if (periods.size() != 3) fail(ErrorCode::invalid_argument, "periods: expected before, during, after");
  for (std::size_t i = 0; i < periods.size(); ++i) {
    const auto& p = periods[i];
    if (p.name != static_cast<PeriodName>(i)) {
      fail(ErrorCode::invalid_argument, "periods: expected order before, during, after");
    }
    if (!(p.range.begin < p.range.end)) {
      fail(ErrorCode::invalid_argument, "periods: '" + std::string(period_name(p.name)) + "' is empty");
    }
    if (i > 0 && periods[i - 1].range.end != p.range.begin) {
      fail(ErrorCode::invalid_argument, "periods: '" + std::string(period_name(p.name)) +
                                            "' must start where the previous period ends");
    }
  }
}

std::vector<DailyIndexPoint> build_daily_index(const std::vector<classify::ScoredTweet>& scores,
                                               const std::vector<corpus::Tweet>& tweets,
                                               Region region, std::size_t min_n) {
  std::unordered_map<std::string, const corpus::Tweet*> by_id;
  by_id.reserve(tweets.size());
  for (const auto& t : tweets) by_id.emplace(t.id, &t);

  struct Acc {
    std::size_t n = 0;
    double sum = 0.0;
  };
  std::map<Date, Acc> days;
  for (const auto& s : scores) {
    auto it = by_id.find(s.tweet_id);
    if (it == by_id.end()) {
      fail(ErrorCode::invalid_argument, "score for tweet '" + s.tweet_id + "' has no matching tweet");
    }
    const auto& t = *it->second;
    if (region != Region::ALL && t.region != region) continue;
    auto& acc = days[day_of(t.created_at)];
    ++acc.n;
    acc.sum += static_cast<int>(s.score);
  }
  std::vector<DailyIndexPoint> out;
  for (const auto& [date, acc] : days) {
    if (acc.n < std::max<std::size_t>(min_n, 1)) continue;
    out.push_back({date, region, acc.n, acc.sum / static_cast<double>(acc.n), acc.sum});
  }
  return out;
}

std::vector<VolPoint> rolling_vol(const std::vector<DailyIndexPoint>& points, std::size_t window) {
  if (window < 2) fail(ErrorCode::invalid_argument, "rolling_vol: window must be >= 2");
  std::vector<VolPoint> out;
  if (points.size() < window) return out;
  std::vector<double> buf(window);
  for (std::size_t end = window; end <= points.size(); ++end) {
    for (std::size_t k = 0; k < window; ++k) buf[k] = points[end - window + k].sum_score;
    out.push_back({points[end - 1].date, *sample_std(buf)});
  }
  return out;
}

Segmented segment(const std::vector<DailyIndexPoint>& points, const std::vector<Period>& periods) {
  validate_periods(periods);
  Segmented out;
  out.parts.resize(periods.size());
  for (const auto& p : points) {
    bool placed = false;
    for (std::size_t i = 0; i < periods.size() && !placed; ++i) {
      if (periods[i].range.contains(p.date)) {
        out.parts[i].push_back(p);
        placed = true;
      }
    }
    if (!placed) ++out.dropped;
  }
  return out;
}

std::vector<WeeklyPoint> weekly_mean(const std::vector<DailyIndexPoint>& points) {
  std::map<Date, std::pair<std::size_t, double>> weeks;
  for (const auto& p : points) {
    auto& [n, sum] = weeks[iso_week_start(p.date)];
    n += p.n;
    sum += p.mean_score * static_cast<double>(p.n);
  }
  std::vector<WeeklyPoint> out;
  for (const auto& [week, acc] : weeks) {
    if (acc.first == 0) continue;
    out.push_back({week, acc.first, acc.second / static_cast<double>(acc.first)});
  }
  return out;
}

Stats describe(const std::vector<double>& xs) {
  Stats s;
  s.n = xs.size();
  if (xs.empty()) return s;
  s.mean = mean(xs);
  s.std = sample_std(xs);
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

IndexSummary summarize_index(Region region, const std::vector<DailyIndexPoint>& points,
                             const std::vector<VolPoint>& vols) {
  IndexSummary out{region, {}, {}, std::nullopt};
  std::vector<double> freq, score, vol;
  for (const auto& p : points) {
    freq.push_back(static_cast<double>(p.n));
    score.push_back(p.mean_score);
  }
  for (const auto& v : vols) vol.push_back(v.vol);
  out.freq = describe(freq);
  out.score = describe(score);
  if (!vol.empty()) out.vol = describe(vol);
  return out;
}

std::string render_index_table(const std::vector<IndexSummary>& rows) {
  auto line = [](std::string_view label, const Stats& s) {
    return std::string(label) + "\t" + format_fixed(s.mean, 2) + "\t" +
           (s.std ? format_fixed(*s.std, 2) : std::string("-")) + "\t" + format_fixed(s.max, 2) +
           "\t" + format_fixed(s.min, 2) + "\n";
  };
  std::string out = "\tmean\tstd\tmax\tmin\nFreq\n";
  for (const auto& r : rows) out += line(region_name(r.region), r.freq);
  out += "Score\n";
  for (const auto& r : rows) out += line(region_name(r.region), r.score);
  if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.vol.has_value(); })) {
    out += "M.Vol(30)\n";
    for (const auto& r : rows) {
      if (r.vol) out += line(region_name(r.region), *r.vol);
    }
  }
  return out;
}

std::string index_to_csv(const std::vector<DailyIndexPoint>& points) {
  std::string out = "date,region,n,mean_score,sum_score\n";
  for (const auto& p : points) {
    out += format_date(p.date) + "," + std::string(region_name(p.region)) + "," +
           std::to_string(p.n) + "," + format_double(p.mean_score) + "," +
           format_double(p.sum_score) + "\n";
  }
  return out;
}

std::string vol_to_csv(Region region, const std::vector<VolPoint>& vols) {
  std::string out = "date,region,vol30\n";
  for (const auto& v : vols) {
    out += format_date(v.date) + "," + std::string(region_name(region)) + "," +
           format_double(v.vol) + "\n";
  }
  return out;
}

}  // namespace infl::sentiment
