#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "config.hpp"
#include "sentiment_index.hpp"

namespace infl::pipeline {

using Logger = std::function<void(const std::string&)>;

struct Options {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> region;   // one of US, GB, EU, CA, ASIA, ALL
  std::optional<std::string> feature;  // lex | tfidf
  std::optional<std::string> model;    // mnb | cnb | logreg | linsvm
  std::optional<std::string> scores;   // model | external
};

struct Context {
  config::PipelineConfig cfg;
  std::filesystem::path out_dir;
  Logger warn;

  [[nodiscard]] std::filesystem::path out(const std::string& name) const { return out_dir / name; }
  [[nodiscard]] std::filesystem::path model_path() const { return out_dir / cfg.model_file; }
};

// Loads the config, applies flag overrides and creates the output directory.
[[nodiscard]] Context make_context(const Options& opt, Logger warn = {});

struct PrepResult {
  std::size_t n_tweets = 0;
};
PrepResult cmd_prep(const Context& ctx);

struct TrainResult {
  classify::EvalReport train;
  classify::EvalReport valid;
  std::string row;  // header plus one result row
};
TrainResult cmd_train(const Context& ctx);

struct EvalResult {
  classify::EvalReport train;
  classify::EvalReport valid;
  std::string text;
};
EvalResult cmd_eval(const Context& ctx);

std::size_t cmd_score(const Context& ctx);

struct RegionIndex {
  Region region;
  std::vector<sentiment::DailyIndexPoint> points;
  std::vector<sentiment::VolPoint> vols;
};

struct IndexResult {
  std::vector<RegionIndex> regions;  // empty regions omitted
  std::string table;
};
IndexResult cmd_index(const Context& ctx);

enum class Which { trend, eq1 };
[[nodiscard]] std::optional<Which> parse_which(std::string_view s);
std::string cmd_regress(const Context& ctx, Which which);

struct StageStatus {
  std::string name;
  std::string status;  // ok | failed | skipped
  std::string error;
};

struct ReportResult {
  bool ok = true;
  std::vector<StageStatus> stages;
};
ReportResult cmd_report(const Context& ctx);

[[nodiscard]] std::string sha256_hex(std::string_view data);

}  // namespace infl::pipeline
