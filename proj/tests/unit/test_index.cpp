#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "error.hpp"
#include "sentiment_index.hpp"
#include "util.hpp"

using namespace infl;
using namespace infl::sentiment;
using classify::ScoredTweet;
using corpus::Tweet;

namespace {

Tweet tweet(std::string id, Date d, int hour, Region r) {
  return {std::move(id), Timestamp(d) + std::chrono::hours(hour), "text", r};
}

std::vector<DailyIndexPoint> series(const std::vector<double>& sums, Date start = make_date(2019, 1, 1)) {
  std::vector<DailyIndexPoint> out;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    out.push_back({start + std::chrono::days(static_cast<int>(i)), Region::ALL, 1, sums[i], sums[i]});
  }
  return out;
}

}  // namespace

TEST_CASE("daily index on a three-day fixture matches a group-by oracle") {
  const Date d1 = make_date(2020, 3, 1), d2 = make_date(2020, 3, 2), d3 = make_date(2020, 3, 4);
  const std::vector<Tweet> tweets{
      tweet("a", d1, 1, Region::US),  tweet("b", d1, 23, Region::GB), tweet("c", d1, 12, Region::US),
      tweet("d", d2, 0, Region::US),  tweet("e", d2, 5, Region::EU),  tweet("f", d3, 9, Region::GB),
      tweet("g", d3, 10, Region::GB), tweet("h", d3, 11, Region::US), tweet("x", d3, 11, Region::US)};
  const std::vector<ScoredTweet> scores{
      {"a", Sentiment::positive}, {"b", Sentiment::negative}, {"c", Sentiment::positive},
      {"d", Sentiment::neutral},  {"e", Sentiment::negative}, {"f", Sentiment::positive},
      {"g", Sentiment::positive}, {"h", Sentiment::negative}};

  for (Region r : {Region::ALL, Region::US, Region::GB, Region::EU, Region::CA}) {
    CAPTURE(region_name(r));
    // oracle: plain loops over the raw pairs
    std::map<Date, std::pair<std::size_t, long>> groups;
    for (const auto& s : scores) {
      for (const auto& t : tweets) {
        if (t.id != s.tweet_id) continue;
        if (r != Region::ALL && t.region != r) continue;
        auto& g = groups[std::chrono::floor<std::chrono::days>(t.created_at)];
        g.first += 1;
        g.second += static_cast<int>(s.score);
      }
    }
    const auto idx = build_daily_index(scores, tweets, r);
    REQUIRE(idx.size() == groups.size());
    std::size_t i = 0;
    for (const auto& [day, g] : groups) {
      CHECK(idx[i].date == day);
      CHECK(idx[i].region == r);
      CHECK(idx[i].n == g.first);
      CHECK(idx[i].sum_score == static_cast<double>(g.second));
      CHECK(idx[i].mean_score == static_cast<double>(g.second) / static_cast<double>(g.first));
      ++i;
    }
  }
  const auto all = build_daily_index(scores, tweets, Region::ALL);
  REQUIRE(all.size() == 3);
  CHECK(all[0].n == 3);
  CHECK(all[0].sum_score == 1.0);
  const auto busy = build_daily_index(scores, tweets, Region::ALL, 3);
  REQUIRE(busy.size() == 2);
  CHECK(busy[0].date == d1);
  CHECK(busy[1].date == d3);
}

TEST_CASE("a score without a tweet is an error") {
  const std::vector<Tweet> tweets{tweet("a", make_date(2020, 1, 1), 0, Region::US)};
  const std::vector<ScoredTweet> scores{{"zz", Sentiment::neutral}};
  CHECK_THROWS_AS((void)build_daily_index(scores, tweets, Region::ALL), Error);
}

TEST_CASE("rolling volatility of a constant series is zero") {
  const auto vol = rolling_vol(series(std::vector<double>(45, 3.0)));
  REQUIRE(vol.size() == 16);
  for (const auto& v : vol) CHECK(v.vol == 0.0);
  CHECK(rolling_vol(series(std::vector<double>(29, 1.0))).empty());
  CHECK_THROWS_AS((void)rolling_vol(series({1.0, 2.0}), 1), Error);
}

TEST_CASE("rolling volatility matches a direct window computation") {
  Rng rng(12);
  std::vector<double> sums;
  for (int i = 0; i < 80; ++i) sums.push_back(static_cast<double>(static_cast<int>(rng.below(21)) - 10));
  const auto pts = series(sums);
  const auto vol = rolling_vol(pts);
  REQUIRE(vol.size() == 51);
  for (std::size_t k = 0; k < vol.size(); ++k) {
    double m = 0;
    for (std::size_t j = k; j < k + 30; ++j) m += sums[j];
    m /= 30;
    double ss = 0;
    for (std::size_t j = k; j < k + 30; ++j) ss += (sums[j] - m) * (sums[j] - m);
    CHECK(vol[k].date == pts[k + 29].date);
    CHECK(std::fabs(vol[k].vol - std::sqrt(ss / 29)) <= 1e-12);
  }
}

TEST_CASE("rolling volatility is translation invariant") {
  Rng rng(31);
  std::vector<double> sums, shifted;
  for (int i = 0; i < 120; ++i) {
    sums.push_back(rng.normal() * 4.0);
    shifted.push_back(sums.back() + 7.25);
  }
  const auto a = rolling_vol(series(sums));
  const auto b = rolling_vol(series(shifted));
  const auto c = rolling_vol(series(sums, make_date(2021, 6, 1)));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::fabs(a[i].vol - b[i].vol) <= 1e-12);
    CHECK(a[i].vol == c[i].vol);
  }
}

TEST_CASE("segment assigns each day to one period and counts the rest") {
  std::vector<DailyIndexPoint> pts = {
      {make_date(2016, 12, 31), Region::ALL, 1, 0, 0}, {make_date(2017, 1, 1), Region::ALL, 1, 0, 0},
      {make_date(2019, 12, 31), Region::ALL, 1, 0, 0}, {make_date(2020, 1, 1), Region::ALL, 1, 0, 0},
      {make_date(2021, 12, 31), Region::ALL, 1, 0, 0}, {make_date(2022, 1, 1), Region::ALL, 1, 0, 0}};
  const auto s = segment(pts, default_periods());
  CHECK(s.parts[0].size() == 2);
  CHECK(s.parts[1].size() == 1);
  CHECK(s.parts[2].size() == 1);
  CHECK(s.dropped == 2);
  auto bad = default_periods();
  bad[1].range.begin = make_date(2020, 2, 1);
  CHECK_THROWS_AS(validate_periods(bad), Error);
  std::swap(bad[0], bad[2]);
  CHECK_THROWS_AS(validate_periods(bad), Error);
}

TEST_CASE("weekly mean is tweet-weighted over ISO weeks") {
  // 2020-03-01 is a Sunday (week of 02-24); 03-02 and 03-04 fall in the week of 03-02.
  std::vector<DailyIndexPoint> pts = {{make_date(2020, 3, 1), Region::ALL, 2, 0.5, 1.0},
                                      {make_date(2020, 3, 2), Region::ALL, 1, -1.0, -1.0},
                                      {make_date(2020, 3, 4), Region::ALL, 3, 1.0 / 3.0, 1.0}};
  const auto w = weekly_mean(pts);
  REQUIRE(w.size() == 2);
  CHECK(w[0].week_start == make_date(2020, 2, 24));
  CHECK(w[0].mean == 0.5);
  CHECK(w[1].week_start == make_date(2020, 3, 2));
  CHECK(w[1].n == 4);
  CHECK(w[1].mean == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("index summary and table") {
  const auto pts = series({1, -1, 2, 0});
  const auto s = summarize_index(Region::US, pts, {});
  CHECK(s.freq.n == 4);
  CHECK(s.score.mean == 0.5);
  CHECK(s.score.max == 2.0);
  CHECK(s.score.min == -1.0);
  CHECK_FALSE(s.vol);
  const auto table = render_index_table({s});
  CHECK(table.find("Freq") != std::string::npos);
  CHECK(table.find("M.Vol(30)") == std::string::npos);
  const auto with_vol = summarize_index(Region::US, pts, {{pts[0].date, 0.5}});
  CHECK(render_index_table({with_vol}).find("M.Vol(30)") != std::string::npos);
  const auto csv = index_to_csv(pts);
  CHECK(csv.rfind("date,region,n,mean_score,sum_score\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
