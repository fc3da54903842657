#include <doctest.h>

#include <cmath>
#include <set>

#include "csv.hpp"
#include "dates.hpp"
#include "error.hpp"
#include "util.hpp"

using namespace infl;

TEST_CASE("trim, split and lowercase") {
  CHECK(trim("  a b \t\n") == "a b");
  CHECK(trim(" \t ").empty());
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
  CHECK(split("", ',') == std::vector<std::string>{""});
  CHECK(ascii_lower("AbC-\xC3\x89") == "abc-\xC3\x89");
}

TEST_CASE("numeric parsing consumes the whole field") {
  CHECK(parse_double("1.5") == 1.5);
  CHECK(parse_double(" -2e3 ") == -2000.0);
  CHECK(parse_double("+0.25") == 0.25);
  CHECK_FALSE(parse_double("+-1"));
  CHECK_FALSE(parse_double("+"));
  CHECK_FALSE(parse_double("1.5x"));
  CHECK_FALSE(parse_double(""));
  CHECK(parse_int("42") == 42);
  CHECK(parse_int("+7") == 7);
  CHECK_FALSE(parse_int("+-7"));
  CHECK_FALSE(parse_int("4.2"));
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456789.0, 8.2e-5}) {
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_fixed(2.345, 2) == "2.35");
  CHECK(format_fixed(-0.001, 2) == "0.00");
}

TEST_CASE("utf-8 decode and encode") {
  std::string s;
  for (char32_t cp : {U'a', U'é', U'€', U'\U0001F600'}) append_utf8(s, cp);
  std::vector<char32_t> back;
  for (std::size_t i = 0; i < s.size();) {
    auto d = decode_utf8(s, i);
    CHECK(d.valid);
    back.push_back(d.cp);
    i += d.len;
  }
  CHECK(back == std::vector<char32_t>{U'a', U'é', U'€', U'\U0001F600'});
  auto bad = decode_utf8("\xff", 0);
  CHECK_FALSE(bad.valid);
  CHECK(bad.len == 1);
}

TEST_CASE("mean and sample std") {
  std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(mean(xs) == 5.0);
  CHECK(*sample_std(xs) == doctest::Approx(std::sqrt(32.0 / 7.0)).epsilon(1e-14));
  CHECK_FALSE(sample_std(std::vector<double>{1.0}));
}

TEST_CASE("Rng is reproducible and bounded") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    auto v = r.below(5);
    CHECK(v < 5);
    seen.insert(v);
    double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(seen.size() == 5);
  double s = 0, s2 = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    double z = r.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(std::fabs(s / n) < 0.05);
  CHECK(std::fabs(s2 / n - 1.0) < 0.05);
}

TEST_CASE("dates") {
  CHECK(format_date(make_date(2020, 2, 29)) == "2020-02-29");
  CHECK_FALSE(parse_date("2019-02-29"));
  CHECK_FALSE(parse_date("2019-1-01"));
  auto ts = parse_timestamp("2020-01-01T01:30:00+02:00");
  REQUIRE(ts);
  CHECK(format_timestamp(*ts) == "2019-12-31T23:30:00Z");
  CHECK(day_of(*ts) == make_date(2019, 12, 31));
  CHECK(parse_timestamp("2020-03-04") == parse_timestamp("2020-03-04T00:00:00Z"));
  CHECK(parse_timestamp("2020-03-04T10:00:00.250Z"));
  // 2021-01-03 is a Sunday; its ISO week began on Monday 2020-12-28.
  CHECK(iso_week_start(make_date(2021, 1, 3)) == make_date(2020, 12, 28));
  CHECK(iso_week_start(make_date(2021, 1, 4)) == make_date(2021, 1, 4));
  auto r = parse_date_range("2017-01-01..2020-01-01");
  REQUIRE(r);
  CHECK(r->contains(make_date(2019, 12, 31)));
  CHECK_FALSE(r->contains(make_date(2020, 1, 1)));
  CHECK_FALSE(parse_date_range("2020-01-01..2017-01-01"));
}

TEST_CASE("csv parsing and quoting") {
  auto rows = csv::parse("a,b\n\"x,y\",\"he said \"\"hi\"\"\"\n\"multi\nline\",2\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].fields == std::vector<std::string>{"x,y", "he said \"hi\""});
  CHECK(rows[2].fields[0] == "multi\nline");
  CHECK(rows[2].line == 3);
  for (std::string f : {"plain", "a,b", "q\"q", "n\nl", ""}) {
    auto back = csv::parse(csv::join({f, "z"}) + "\n");
    REQUIRE(back.size() == 1);
    CHECK(back[0].fields[0] == f);
  }
  CHECK_THROWS_AS((void)csv::parse("\"open"), Error);
}
