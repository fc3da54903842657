// inflsent: command-line front end over the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <string>

#include "inflsent/inflsent.h"

namespace {

struct Common {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> region;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "pipeline config file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", c.out, "output directory");
  cmd->add_option("--seed", c.seed, "random seed (unsigned 64-bit)");
  cmd->add_option("--region", c.region, "region filter")
      ->check(CLI::IsMember({"US", "GB", "EU", "CA", "ASIA", "ALL"}, CLI::ignore_case));
}

int report_error(const char* cmd) {
  std::fprintf(stderr, "error: %s: %s\n", cmd, infl_last_error());
  return 1;
}

void print_text(char* text) {
  if (text) {
    std::fputs(text, stdout);
    infl_string_free(text);
  }
}

void on_warning(const char* msg, void*) { std::fprintf(stderr, "warning: %s\n", msg); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflation sentiment index pipeline"};
  app.set_version_flag("--version", std::string(infl_version()));
  app.require_subcommand(1);

  Common common;
  std::optional<std::string> feature, model, scores;
  std::string which;

  auto* prep = app.add_subcommand("prep", "normalize, tokenize and stem the filtered tweets");
  auto* train = app.add_subcommand("train", "train a classifier on the labeled set");
  auto* eval = app.add_subcommand("eval", "evaluate the trained classifier");
  auto* score = app.add_subcommand("score", "score the filtered tweets");
  auto* index = app.add_subcommand("index", "daily sentiment index, volatility and charts");
  auto* regress = app.add_subcommand("regress", "period trend models or inflation regressions");
  auto* report = app.add_subcommand("report", "run every stage and write a manifest");
  for (auto* cmd : {prep, train, eval, score, index, regress, report}) add_common(cmd, common);

  for (auto* cmd : {train, report}) {
    cmd->add_option("--feature", feature, "feature extractor")
        ->check(CLI::IsMember({"lex", "tfidf"}, CLI::ignore_case));
    cmd->add_option("--model", model, "classifier")
        ->check(CLI::IsMember({"mnb", "cnb", "logreg", "linsvm"}, CLI::ignore_case));
  }
  for (auto* cmd : {score, index, regress, report}) {
    cmd->add_option("--scores", scores, "score source")
        ->check(CLI::IsMember({"model", "external"}, CLI::ignore_case));
  }
  regress->add_option("--which", which, "trend or eq1")
      ->required()
      ->check(CLI::IsMember({"trend", "eq1"}, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  infl_set_log_callback(on_warning, nullptr);
  infl_run_options opt;
  infl_run_options_init(&opt);
  opt.config_path = common.config.c_str();
  opt.out_dir = common.out.c_str();
  if (common.seed) {
    opt.has_seed = 1;
    opt.seed = *common.seed;
  }
  if (common.region) opt.region = common.region->c_str();
  if (feature) opt.feature = feature->c_str();
  if (model) opt.model = model->c_str();
  if (scores) opt.scores = scores->c_str();

  char* text = nullptr;
  if (*prep) {
    size_t n = 0;
    if (infl_run_prep(&opt, &n) != INFL_OK) return report_error("prep");
    std::printf("prep: %zu tweets\n", n);
  } else if (*train) {
    if (infl_run_train(&opt, nullptr, &text) != INFL_OK) return report_error("train");
    print_text(text);
  } else if (*eval) {
    if (infl_run_eval(&opt, nullptr, &text) != INFL_OK) return report_error("eval");
    print_text(text);
  } else if (*score) {
    size_t n = 0;
    if (infl_run_score(&opt, &n) != INFL_OK) return report_error("score");
    std::printf("score: %zu tweets\n", n);
  } else if (*index) {
    if (infl_run_index(&opt, nullptr, &text) != INFL_OK) return report_error("index");
    print_text(text);
  } else if (*regress) {
    const auto kind = (which == "eq1" || which == "EQ1") ? INFL_REGRESS_EQ1 : INFL_REGRESS_TREND;
    if (infl_run_regress(&opt, kind, &text) != INFL_OK) return report_error("regress");
    print_text(text);
  } else if (*report) {
    const auto st = infl_run_report(&opt, &text);
    print_text(text);
    if (st != INFL_OK) return report_error("report");
  }
  return 0;
}
