#include "timeseries.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "util.hpp"

namespace infl::econo {

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (n <= max_lag + 1) {
    fail(ErrorCode::invalid_argument, "acf: series of length " + std::to_string(n) +
                                          " is too short for lag " + std::to_string(max_lag));
  }
  for (double v : series) {
    if (!std::isfinite(v)) fail(ErrorCode::numeric, "acf: non-finite value");
  }
  const double m = mean(series);
  std::vector<double> dev(n);
  double denom = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    dev[t] = series[t] - m;
    denom += dev[t] * dev[t];
  }
  if (denom <= 0.0 || denom <= 1e-300 * static_cast<double>(n)) {
    fail(ErrorCode::numeric, "acf: series has zero variance");
  }
  std::vector<double> out(max_lag + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double s = 0.0;
    for (std::size_t t = k; t < n; ++t) s += dev[t] * dev[t - k];
    out[k] = s / denom;
  }
  return out;
}

std::vector<double> pacf(std::span<const double> series, std::size_t max_lag) {
  const auto r = acf(series, max_lag);
  std::vector<double> out(max_lag + 1);
  out[0] = 1.0;
  std::vector<double> phi, prev;
  double v = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = r[k];
    for (std::size_t j = 1; j < k; ++j) num -= prev[j - 1] * r[k - j];
    const double kk = num / v;
    phi.assign(k, 0.0);
    for (std::size_t j = 1; j < k; ++j) phi[j - 1] = prev[j - 1] - kk * prev[k - j - 1];
    phi[k - 1] = kk;
    v *= 1.0 - kk * kk;
    out[k] = kk;
    prev = phi;
  }
  return out;
}

std::size_t select_lag(std::span<const double> series, std::size_t max_p) {
  if (max_p == 0) return 0;
  const auto pc = pacf(series, max_p);
  const double band = 1.96 / std::sqrt(static_cast<double>(series.size()));
  std::size_t p = 0;
  for (std::size_t k = 1; k <= max_p; ++k) {
    if (std::fabs(pc[k]) > band) p = k;
  }
  return p;
}

RegressionResult fit_ar_trend(std::span<const double> series, const LagSpec& spec) {
  const std::size_t n = series.size();
  if (n <= spec.p + 2) {
    fail(ErrorCode::invalid_argument, "fit_ar_trend: series of length " + std::to_string(n) +
                                          " is too short for p = " + std::to_string(spec.p));
  }
  Design d;
  d.response = "y";
  for (std::size_t j = 1; j <= spec.p; ++j) d.columns.push_back("L(" + std::to_string(j) + ")");
  if (spec.include_trend) d.columns.push_back("t");
  d.columns.push_back("const");
  std::vector<double> row;
  for (std::size_t t = spec.p; t < n; ++t) {
    row.clear();
    for (std::size_t j = 1; j <= spec.p; ++j) row.push_back(series[t - j]);
    if (spec.include_trend) row.push_back(static_cast<double>(t));
    row.push_back(1.0);
    d.add_row(row, series[t]);
  }
  return ols(d);
}

MseGrid period_mse(const std::vector<PeriodFit>& fits) {
  MseGrid g;
  for (const auto& f : fits) {
    if (std::find(g.regions.begin(), g.regions.end(), f.region) == g.regions.end()) {
      g.regions.push_back(f.region);
    }
    if (std::find(g.periods.begin(), g.periods.end(), f.period) == g.periods.end()) {
      g.periods.push_back(f.period);
    }
  }
  std::sort(g.periods.begin(), g.periods.end());
  g.mse.assign(g.regions.size() * g.periods.size(), std::nullopt);
  for (const auto& f : fits) {
    const auto r = std::find(g.regions.begin(), g.regions.end(), f.region) - g.regions.begin();
    const auto p = std::find(g.periods.begin(), g.periods.end(), f.period) - g.periods.begin();
    if (f.fit) g.mse[r * g.periods.size() + p] = f.fit->mse;
  }
  return g;
}

std::string render_mse_table(const MseGrid& grid) {
  std::string out;
  for (auto p : grid.periods) out += "\t" + std::string(sentiment::period_name(p));
  out += "\n";
  for (std::size_t r = 0; r < grid.regions.size(); ++r) {
    out += region_name(grid.regions[r]);
    for (std::size_t p = 0; p < grid.periods.size(); ++p) {
      auto v = grid.at(r, p);
      out += "\t" + (v ? format_fixed(*v, 3) : std::string("-"));
    }
    out += "\n";
  }
  return out;
}

}  // namespace infl::econo
