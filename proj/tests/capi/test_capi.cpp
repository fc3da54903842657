// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "inflsent/inflsent.h"

namespace fs = std::filesystem;

namespace {

const std::string kConfig = std::string(INFLSENT_SOURCE_DIR) + "/data/fixtures/pipeline.toml";

std::string scratch(const std::string& name) {
  auto p = fs::path(INFLSENT_TEST_TMP) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

std::vector<std::string> g_warnings;
void collect(const char* msg, void*) { g_warnings.emplace_back(msg); }

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(infl_version()) > 0);
  CHECK(infl_stem(nullptr, nullptr, 0, nullptr) == INFL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(infl_last_error()).find("NULL") != std::string::npos);
}

TEST_CASE("stem with buffer sizing") {
  size_t needed = 0;
  char small[2];
  CHECK(infl_stem("generously", small, sizeof small, &needed) == INFL_ERR_INVALID_ARGUMENT);
  CHECK(needed == std::strlen("generous") + 1);
  std::vector<char> buf(needed);
  REQUIRE(infl_stem("generously", buf.data(), buf.size(), nullptr) == INFL_OK);
  CHECK(std::string(buf.data()) == "generous");
  CHECK(std::string(infl_last_error()).empty());
}

TEST_CASE("prep handle tokenizes text") {
  infl_prep* prep = nullptr;
  REQUIRE(infl_prep_create(nullptr, 1, &prep) == INFL_OK);
  infl_tokens* toks = nullptr;
  REQUIRE(infl_prep_run(prep, "The prices are RISING", &toks) == INFL_OK);
  REQUIRE(infl_tokens_count(toks) == 2);
  CHECK(std::string(infl_tokens_at(toks, 0)) == "price");
  CHECK(std::string(infl_tokens_at(toks, 1)) == "rise");
  CHECK(infl_tokens_at(toks, 2) == nullptr);
  infl_tokens_free(toks);
  infl_prep_free(prep);
  infl_prep_free(nullptr);
  CHECK(infl_prep_create("/no/such/stopwords.txt", 1, &prep) == INFL_ERR_IO);
}

TEST_CASE("acf, pacf and lag selection") {
  std::vector<double> y(400);
  double prev = 0.0;
  unsigned s = 12345;
  for (auto& v : y) {
    s = s * 1103515245u + 12345u;
    const double e = static_cast<double>((s >> 8) & 0xffff) / 65536.0 - 0.5;
    prev = 0.7 * prev + e;
    v = prev;
  }
  double r[4], p[4];
  REQUIRE(infl_acf(y.data(), y.size(), 3, r) == INFL_OK);
  CHECK(r[0] == 1.0);
  REQUIRE(infl_pacf(y.data(), y.size(), 3, p) == INFL_OK);
  CHECK(p[1] == r[1]);
  size_t lag = 9;
  REQUIRE(infl_select_lag(y.data(), y.size(), 1, &lag) == INFL_OK);
  CHECK(lag == 1);
  CHECK(infl_acf(y.data(), 2, 3, r) == INFL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("ols and fit_ar_trend through handles") {
  const double x[] = {1, 0, 1, 1, 1, 2, 1, 3, 1, 4};
  const double y[] = {1.0, 3.1, 4.9, 7.2, 8.8};
  const char* names[] = {"const", "x"};
  infl_regression* r = nullptr;
  REQUIRE(infl_ols(x, 5, 2, names, y, &r) == INFL_OK);
  REQUIRE(infl_regression_n_coef(r) == 2);
  infl_coef c;
  REQUIRE(infl_regression_coef(r, 1, &c) == INFL_OK);
  CHECK(std::string(c.name) == "x");
  CHECK(c.estimate == doctest::Approx(1.97).epsilon(1e-12));  // Sxy / Sxx = 19.7 / 10
  CHECK(infl_regression_n_obs(r) == 5);
  CHECK(infl_regression_dof(r) == 3);
  CHECK(infl_regression_coef(r, 2, &c) == INFL_ERR_INVALID_ARGUMENT);
  infl_regression_free(r);

  const double rank_x[] = {1, 2, 1, 2, 1, 2, 1, 2};
  CHECK(infl_ols(rank_x, 4, 2, names, y, &r) == INFL_ERR_NUMERIC);

  std::vector<double> series;
  for (int t = 0; t < 30; ++t) series.push_back(0.5 * t + (t % 3));
  REQUIRE(infl_fit_ar_trend(series.data(), series.size(), 1, 1, &r) == INFL_OK);
  CHECK(infl_regression_n_coef(r) == 3);
  CHECK(std::isfinite(infl_regression_mse(r)));
  infl_regression_free(r);
}

TEST_CASE("pipeline commands through the C API") {
  const auto out = scratch("capi_run");
  infl_set_log_callback(collect, nullptr);
  infl_run_options opt;
  infl_run_options_init(&opt);
  opt.config_path = kConfig.c_str();
  opt.out_dir = out.c_str();

  size_t n = 0;
  REQUIRE(infl_run_prep(&opt, &n) == INFL_OK);
  CHECK(n == 224);

  infl_eval_row row{};
  char* text = nullptr;
  REQUIRE(infl_run_train(&opt, &row, &text) == INFL_OK);
  REQUIRE(text != nullptr);
  CHECK(std::string(text).find("tfidf\tmnb") != std::string::npos);
  CHECK(row.valid_accuracy >= 0.0);
  CHECK(row.valid_accuracy <= 100.0);
  infl_string_free(text);

  infl_model* model = nullptr;
  REQUIRE(infl_model_load((out + "/model.txt").c_str(), &model) == INFL_OK);
  CHECK(infl_model_dim(model) > 0);
  const uint32_t idx[] = {0, 1};
  const double val[] = {0.6, 0.8};
  int label = 7;
  REQUIRE(infl_model_predict(model, idx, val, 2, &label) == INFL_OK);
  CHECK((label >= -1 && label <= 1));
  const uint32_t bad[] = {1, 0};
  CHECK(infl_model_predict(model, bad, val, 2, &label) == INFL_ERR_INVALID_ARGUMENT);
  infl_model_free(model);

  REQUIRE(infl_run_score(&opt, &n) == INFL_OK);
  CHECK(n == 224);
  size_t regions = 0;
  REQUIRE(infl_run_index(&opt, &regions, nullptr) == INFL_OK);
  CHECK(regions >= 1);
  REQUIRE(infl_run_regress(&opt, INFL_REGRESS_TREND, &text) == INFL_OK);
  infl_string_free(text);
  CHECK(infl_run_regress(&opt, static_cast<infl_regress_kind>(5), nullptr) == INFL_ERR_INVALID_ARGUMENT);
  infl_set_log_callback(nullptr, nullptr);
}

TEST_CASE("pipeline failures map onto status codes") {
  infl_run_options opt;
  infl_run_options_init(&opt);
  CHECK(infl_run_prep(&opt, nullptr) == INFL_ERR_INVALID_ARGUMENT);
  CHECK(infl_run_prep(nullptr, nullptr) == INFL_ERR_INVALID_ARGUMENT);
  const std::string missing = std::string(INFLSENT_SOURCE_DIR) + "/no_such.toml";
  opt.config_path = missing.c_str();
  CHECK(infl_run_prep(&opt, nullptr) == INFL_ERR_IO);
  opt.config_path = kConfig.c_str();
  const auto out = scratch("capi_fail");
  opt.out_dir = out.c_str();
  opt.model = "forest";
  CHECK(infl_run_train(&opt, nullptr, nullptr) == INFL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(infl_last_error()).find("forest") != std::string::npos);
  opt.model = nullptr;
  CHECK(infl_run_score(&opt, nullptr) == INFL_ERR_IO);
}
