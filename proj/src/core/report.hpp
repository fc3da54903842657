#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "classify.hpp"
#include "eq1.hpp"
#include "ols.hpp"
#include "timeseries.hpp"

namespace infl::report {

// "***" p < 0.01, "**" p < 0.05, "*" p < 0.10.
[[nodiscard]] std::string_view stars(double p);

// Fixed with `decimals` digits, switching to scientific for small magnitudes.
[[nodiscard]] std::string format_coef(double v, int decimals = 3);

// {columns, estimate, se, t, p, mse, n, dof}; non-finite values become null.
[[nodiscard]] nlohmann::json to_json(const econo::RegressionResult& r);

// Classifier result row: Feature, Model, Train, Valid, FP, FN.
[[nodiscard]] std::string table4_header();
[[nodiscard]] std::string table4_row(classify::FeatureKind f, classify::ModelKind m,
                                     const classify::EvalReport& train,
                                     const classify::EvalReport& valid);

// Per-region blocks, one row per coefficient, one (estimate, p) cell pair per
// period.
[[nodiscard]] std::string render_trend_table(const std::vector<econo::PeriodFit>& fits);

struct Eq1Column {
  std::string label;  // Total, before, during, after
  std::optional<econo::Eq1Pair> pair;
  std::string note;
};

// Paired AR / AR+exogenous columns per label; estimates with stars, p-values
// in parentheses on the following line.
[[nodiscard]] std::string render_eq1_table(std::string_view title,
                                           const std::vector<Eq1Column>& columns);

}  // namespace infl::report
