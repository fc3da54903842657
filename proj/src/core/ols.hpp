#pragma once

#include <string>
#include <vector>

namespace infl::econo {

struct Design {
  std::vector<std::string> columns;
  std::vector<double> x;  // row-major, rows() x columns.size()
  std::vector<double> y;
  std::string response = "y";

  [[nodiscard]] std::size_t rows() const { return y.size(); }
  [[nodiscard]] std::size_t cols() const { return columns.size(); }
  [[nodiscard]] double at(std::size_t r, std::size_t c) const { return x[r * cols() + c]; }
  void add_row(const std::vector<double>& regressors, double response_value);
  // Names unique, entries finite, shape consistent, rows >= cols + 1.
  void validate() const;
};

struct Coefficient {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;
};

struct RegressionResult {
  std::vector<Coefficient> coef;
  std::vector<double> residuals;
  double rss = 0.0;
  double mse = 0.0;  // rss / n_obs
  std::size_t n_obs = 0;
  std::size_t dof = 0;

  // Throws if `name` is not a column.
  [[nodiscard]] const Coefficient& at(const std::string& name) const;
};

// Two-sided Student-t tail probability P(|T| >= |t|).
[[nodiscard]] double t_pvalue(double t, double dof);

// Least squares through a Householder QR factorization; conventional
// standard errors from sigma^2 (X'X)^-1 with sigma^2 = rss / dof.
[[nodiscard]] RegressionResult ols(const Design& d);

}  // namespace infl::econo
