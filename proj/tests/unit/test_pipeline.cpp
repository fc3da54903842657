#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "config.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "pipeline.hpp"
#include "svg.hpp"
#include "util.hpp"

using namespace infl;
using namespace infl::pipeline;
namespace fs = std::filesystem;

namespace {

const std::string kFixtureConfig = testing::source_path("data/fixtures/pipeline.toml").string();

std::string slurp(const fs::path& p) { return read_file(p.string()); }

// Config in `dir` pointing at the bundled fixtures, with optional overrides
// of individual input paths.
std::string fixture_config(const fs::path& dir, const std::map<std::string, std::string>& paths = {}) {
  const auto fx = testing::source_path("data/fixtures");
  const auto data = testing::source_path("data");
  std::map<std::string, std::string> p{
      {"tweets", (fx / "tweets.jsonl").string()},       {"labels", (fx / "labels.csv").string()},
      {"trends", (fx / "trends.csv").string()},         {"yields_us", (fx / "yields_us.csv").string()},
      {"yields_gb", (fx / "yields_gb.csv").string()},   {"lexicon", (data / "lexicon.tsv").string()},
      {"stopwords", (data / "stopwords.txt").string()}, {"keywords", (data / "keywords.ini").string()},
      {"regions", (data / "regions.csv").string()},
      {"external_scores", (fx / "external_scores.csv").string()}};
  for (const auto& [k, v] : paths) p[k] = v;
  std::string text = "seed = 42\n[paths]\n";
  for (const auto& [k, v] : p) text += k + " = \"" + v + "\"\n";
  const auto path = dir / "pipeline.toml";
  write_file(path.string(), text);
  return path.string();
}

Context context(const std::string& config, const fs::path& out, std::vector<std::string>* warnings = nullptr) {
  Options o;
  o.config_path = config;
  o.out_dir = out.string();
  return make_context(o, [warnings](const std::string& m) {
    if (warnings) warnings->push_back(m);
  });
}

}  // namespace

TEST_CASE("raw config parsing") {
  auto raw = config::RawConfig::parse(
      "seed = 7 # trailing comment\n"
      "[Paths]\n"
      "tweets = \"a#b.jsonl\"\n"
      "\n"
      "[model]\n"
      "kind=cnb\n",
      "mem");
  CHECK(raw.get("seed") == "7");
  CHECK(raw.get("paths.tweets") == "a#b.jsonl");
  CHECK(raw.get("model.kind") == "cnb");
  CHECK_THROWS_AS((void)config::RawConfig::parse("a = 1\na = 2\n", "mem"), Error);
  CHECK_THROWS_AS((void)config::RawConfig::parse("[model\n", "mem"), Error);
  CHECK_THROWS_AS((void)config::RawConfig::parse("novalue\n", "mem"), Error);
  CHECK_THROWS_AS((void)config::RawConfig::parse("a = \"open\n", "mem"), Error);
}

TEST_CASE("pipeline config building and validation") {
  auto raw = config::RawConfig::parse("[model]\nkind = logreg\nalpha = 0.5\n[index]\nregions = us, gb\n", "mem");
  const auto c = config::build(raw);
  CHECK(c.model == classify::ModelKind::logreg);
  CHECK(c.alpha == 0.5);
  CHECK(c.index_regions == std::vector<Region>{Region::US, Region::GB});
  CHECK(c.seed == 42);
  CHECK_THROWS_AS((void)config::build(config::RawConfig::parse("colour = red\n", "mem")), Error);
  CHECK_THROWS_AS((void)config::build(config::RawConfig::parse("[model]\nkind = forest\n", "mem")), Error);
  CHECK_THROWS_AS((void)config::build(config::RawConfig::parse("[model]\nmin_df = 0\n", "mem")), Error);
  CHECK(config::parse_seed("18446744073709551615") == 18446744073709551615ull);
  CHECK_THROWS_AS((void)config::parse_seed("-1"), Error);
  CHECK_THROWS_AS((void)config::parse_seed("18446744073709551616"), Error);
}

TEST_CASE("relative paths resolve against the config directory") {
  auto raw = config::RawConfig::load(kFixtureConfig);
  const auto c = config::build(raw);
  CHECK(c.resolve("tweets") == testing::source_path("data/fixtures/tweets.jsonl").lexically_normal());
  CHECK(c.resolve("lexicon") == testing::source_path("data/lexicon.tsv").lexically_normal());
  CHECK_NOTHROW(c.validate());
  CHECK(c.canonical() == config::build(config::RawConfig::load(kFixtureConfig)).canonical());
}

TEST_CASE("missing input files are reported by key") {
  auto dir = testing::scratch("pipe_missing");
  const auto cfg = fixture_config(dir, {{"tweets", (dir / "nope.jsonl").string()}});
  try {
    (void)cmd_prep(context(cfg, dir / "out"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("config: paths.tweets '", 0) == 0);
    CHECK(e.code() == ErrorCode::io);
  }
}

TEST_CASE("prep output is deterministic") {
  auto dir = testing::scratch("pipe_prep");
  const auto a = cmd_prep(context(kFixtureConfig, dir / "a"));
  const auto b = cmd_prep(context(kFixtureConfig, dir / "b"));
  CHECK(a.n_tweets == 224);
  CHECK(a.n_tweets == b.n_tweets);
  CHECK(slurp(dir / "a" / "tokens.csv") == slurp(dir / "b" / "tokens.csv"));
}

TEST_CASE("train, eval and score on the fixture") {
  auto dir = testing::scratch("pipe_train");
  const auto ctx = context(kFixtureConfig, dir);
  const auto t = cmd_train(ctx);
  CHECK(t.train.n + t.valid.n == 150);
  CHECK(t.valid.n == 30);
  CHECK(t.row.find("tfidf\tmnb\t") != std::string::npos);
  CHECK(fs::exists(dir / "model.txt"));
  CHECK(fs::exists(dir / "model.txt.vocab.csv"));
  const auto e = cmd_eval(ctx);
  CHECK(e.valid.accuracy == t.valid.accuracy);
  CHECK(cmd_score(ctx) == 224);
  const auto rows = csv::parse(slurp(dir / "scores.csv"));
  CHECK(rows.size() == 225);

  for (const char* model : {"cnb", "logreg", "linsvm"}) {
    Options o;
    o.config_path = kFixtureConfig;
    o.out_dir = (dir / model).string();
    o.model = model;
    const auto r = cmd_train(make_context(o));
    CHECK(r.valid.n == 30);
  }
  Options lex;
  lex.config_path = kFixtureConfig;
  lex.out_dir = (dir / "lex").string();
  lex.feature = "lex";
  CHECK(cmd_train(make_context(lex)).row.find("lex\tmnb") != std::string::npos);
}

TEST_CASE("score without a trained model is a clear error") {
  auto dir = testing::scratch("pipe_nomodel");
  try {
    (void)cmd_score(context(kFixtureConfig, dir));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("run train first") != std::string::npos);
  }
}

TEST_CASE("index rows equal distinct tweet days and SVG charts are well-formed XML") {
  auto dir = testing::scratch("pipe_index");
  Options o;
  o.config_path = kFixtureConfig;
  o.out_dir = dir.string();
  o.scores = "external";
  std::vector<std::string> warnings;
  const auto ctx = make_context(o, [&](const std::string& m) { warnings.push_back(m); });
  const auto res = cmd_index(ctx);
  CHECK_FALSE(warnings.empty());  // the fixture carries two unknown ids

  // distinct UTC days among filtered, scored tweets
  const auto scores = csv::parse(slurp(testing::source_path("data/fixtures/external_scores.csv")));
  std::set<std::string> scored;
  for (std::size_t i = 1; i < scores.size(); ++i) scored.insert(scores[i].fields[0]);
  std::set<std::string> days;
  std::ifstream in(testing::source_path("data/fixtures/tweets.jsonl"));
  const auto dict = corpus::default_dictionary();
  for (std::string line; std::getline(in, line);) {
    auto j = nlohmann::json::parse(line);
    if (!scored.count(j["id"].get<std::string>())) continue;
    if (!corpus::matches_keywords(j["text"].get<std::string>(), dict)) continue;
    days.insert(j["created_at"].get<std::string>().substr(0, 10));
  }
  REQUIRE(res.regions.front().region == Region::ALL);
  CHECK(res.regions.front().points.size() == days.size());

  for (const auto& ri : res.regions) {
    const auto file = dir / ("index_" + std::string(region_name(ri.region)) + ".svg");
    REQUIRE(fs::exists(file));
    boost::property_tree::ptree tree;
    std::istringstream xml(slurp(file));
    CHECK_NOTHROW(boost::property_tree::read_xml(xml, tree));
    CHECK(tree.get_child_optional("svg").has_value());
  }
  const auto index_csv = csv::parse(slurp(dir / "index.csv"));
  std::size_t total = 0;
  for (const auto& ri : res.regions) total += ri.points.size();
  CHECK(index_csv.size() == total + 1);
}

TEST_CASE("svg escaping and empty series") {
  CHECK(svg::escape("a<b & \"c\"") == "a&lt;b &amp; &quot;c&quot;");
  const auto s = svg::line_chart("t <1>", {{"x&y", {}}});
  boost::property_tree::ptree tree;
  std::istringstream xml(s);
  CHECK_NOTHROW(boost::property_tree::read_xml(xml, tree));
}

TEST_CASE("regress writes identical JSON on rerun") {
  auto dir = testing::scratch("pipe_regress");
  Options o;
  o.config_path = kFixtureConfig;
  o.scores = "external";
  o.out_dir = (dir / "a").string();
  const auto ta = cmd_regress(make_context(o), Which::trend);
  const auto ea = cmd_regress(make_context(o), Which::eq1);
  o.out_dir = (dir / "b").string();
  const auto tb = cmd_regress(make_context(o), Which::trend);
  const auto eb = cmd_regress(make_context(o), Which::eq1);
  CHECK(ta == tb);
  CHECK(ea == eb);
  CHECK(slurp(dir / "a" / "trend.json") == slurp(dir / "b" / "trend.json"));
  CHECK(slurp(dir / "a" / "eq1.json") == slurp(dir / "b" / "eq1.json"));
  const auto j = nlohmann::json::parse(slurp(dir / "a" / "eq1.json"));
  CHECK(j["model"] == "eq1");
  const bool has_coef = ta.find("L(1)") != std::string::npos || ta.find("const") != std::string::npos;
  CHECK(has_coef);
  CHECK(parse_which("EQ1") == Which::eq1);
  CHECK_FALSE(parse_which("var"));
}

TEST_CASE("report records a failed stage and skips the rest") {
  auto dir = testing::scratch("pipe_partial");
  write_file((dir / "trends.csv").string(), "date,region,group,value\n2020-01-05,US,inflation,10\n2020-01-19,US,inflation,12\n");
  const auto cfg = fixture_config(dir, {{"trends", (dir / "trends.csv").string()}});
  const auto r = cmd_report(context(cfg, dir / "out"));
  CHECK_FALSE(r.ok);
  std::map<std::string, std::string> status;
  for (const auto& s : r.stages) status[s.name] = s.status;
  CHECK(status["prep"] == "ok");
  CHECK(status["index"] == "ok");
  CHECK(status["regress_trend"] == "ok");
  CHECK(status["regress_eq1"] == "failed");
  const auto m = nlohmann::json::parse(slurp(dir / "out" / "manifest.json"));
  CHECK(m["ok"] == false);
  CHECK(m["stages"].back()["error"].get<std::string>().find("weekly") != std::string::npos);

  write_file((dir / "bad.jsonl").string(), "{broken\n");
  const auto cfg2 = fixture_config(dir, {{"tweets", (dir / "bad.jsonl").string()}});
  const auto r2 = cmd_report(context(cfg2, dir / "out2"));
  CHECK_FALSE(r2.ok);
  CHECK(r2.stages.front().status == "failed");
  for (std::size_t i = 1; i < r2.stages.size(); ++i) CHECK(r2.stages[i].status == "skipped");
}

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
