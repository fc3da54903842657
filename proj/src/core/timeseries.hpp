#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ols.hpp"
#include "sentiment_index.hpp"

namespace infl::econo {

// acf[0..max_lag]; needs series.size() > max_lag + 1 and nonzero variance.
[[nodiscard]] std::vector<double> acf(std::span<const double> series, std::size_t max_lag);
// pacf[0..max_lag] by the Durbin-Levinson recursion; pacf[0] = 1.
[[nodiscard]] std::vector<double> pacf(std::span<const double> series, std::size_t max_lag);

// Smallest p such that every |pacf(k)|, p < k <= max_p, is within 1.96/sqrt(n).
[[nodiscard]] std::size_t select_lag(std::span<const double> series, std::size_t max_p);

struct LagSpec {
  std::size_t p = 1;
  bool include_trend = true;
};

// y_t on L(1..p), t, const (in that column order); t is the 0-based position
// in `series`, so the first fitted row has t = p.
[[nodiscard]] RegressionResult fit_ar_trend(std::span<const double> series, const LagSpec& spec);

struct PeriodFit {
  Region region;
  sentiment::PeriodName period;
  std::size_t p = 0;
  std::optional<RegressionResult> fit;  // absent when the period is too short
  std::string note;                     // why the fit is absent
};

struct MseGrid {
  std::vector<Region> regions;
  std::vector<sentiment::PeriodName> periods;
  std::vector<std::optional<double>> mse;  // regions x periods, row-major

  [[nodiscard]] std::optional<double> at(std::size_t r, std::size_t p) const {
    return mse[r * periods.size() + p];
  }
};

[[nodiscard]] MseGrid period_mse(const std::vector<PeriodFit>& fits);
[[nodiscard]] std::string render_mse_table(const MseGrid& grid);

}  // namespace infl::econo
