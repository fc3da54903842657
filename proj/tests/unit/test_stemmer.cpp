#include <doctest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "stemmer.hpp"
#include "util.hpp"

using infl::textprep::stem;

TEST_CASE("stemmer handles the special forms") {
  CHECK(stem("skies") == "sky");
  CHECK(stem("dying") == "die");
  CHECK(stem("news") == "news");
  CHECK(stem("generously") == "generous");
  CHECK(stem("caresses") == "caress");
  CHECK(stem("cried") == "cri");
  CHECK(stem("inflation") == "inflat");
  CHECK(stem("prices") == "price");
  CHECK(stem("a") == "a");
  CHECK(stem("") == "");
  CHECK(stem("'") == "'");
}

TEST_CASE("stemmer does not fail on non-ASCII input") {
  CHECK_NOTHROW((void)stem("caf\xC3\xA9s"));
  CHECK_NOTHROW((void)stem("\xF0\x9F\x98\x80"));
}

TEST_CASE("stemmer agrees with the Snowball sample vocabulary") {
  const auto text = infl::read_file(testing::source_path("tests/data/snowball_en_sample.tsv").string());
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  REQUIRE(pairs.size() == 1000);

  const auto t0 = std::chrono::steady_clock::now();
  std::string report;
  std::size_t agree = 0;
  for (const auto& [word, expected] : pairs) {
    const auto got = stem(word);
    if (got == expected) {
      ++agree;
    } else {
      report += word + "\texpected " + expected + "\tgot " + got + "\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto dir = testing::scratch("stemmer");
  infl::write_file((dir / "discrepancies.txt").string(),
                   "agree " + std::to_string(agree) + " / " + std::to_string(pairs.size()) + "\n" + report);
  CHECK(static_cast<double>(agree) / static_cast<double>(pairs.size()) >= 0.995);
  CHECK(secs < 1.0);
}
