#include "ols.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <set>

#include "error.hpp"

namespace infl::econo {

void Design::add_row(const std::vector<double>& regressors, double response_value) {
  if (regressors.size() != cols()) fail(ErrorCode::invalid_argument, "design: row width mismatch");
  x.insert(x.end(), regressors.begin(), regressors.end());
  y.push_back(response_value);
}

void Design::validate() const {
  if (columns.empty()) fail(ErrorCode::invalid_argument, "design: no regressors");
  std::set<std::string> names(columns.begin(), columns.end());
  if (names.size() != columns.size()) fail(ErrorCode::invalid_argument, "design: duplicate column name");
  if (x.size() != rows() * cols()) fail(ErrorCode::invalid_argument, "design: matrix shape mismatch");
  if (rows() < cols() + 1) {
    fail(ErrorCode::invalid_argument, "design: " + std::to_string(rows()) + " rows for " +
                                          std::to_string(cols()) + " regressors");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(x.begin(), x.end(), finite) || !std::all_of(y.begin(), y.end(), finite)) {
    fail(ErrorCode::numeric, "design: non-finite entry");
  }
}

const Coefficient& RegressionResult::at(const std::string& name) const {
  for (const auto& c : coef) {
    if (c.name == name) return c;
  }
  fail(ErrorCode::invalid_argument, "no coefficient named '" + name + "'");
}

double t_pvalue(double t, double dof) {
  if (std::isnan(t)) return 1.0;
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(dof);
  return std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))), 0.0, 1.0);
}

RegressionResult ols(const Design& d) {
  d.validate();
  const std::size_t n = d.rows();
  const std::size_t k = d.cols();

  // column-major working copy
  std::vector<double> a(n * k);
  std::vector<double> col_norm(k, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      a[c * n + r] = d.at(r, c);
      col_norm[c] += d.at(r, c) * d.at(r, c);
    }
  }
  std::vector<double> qty = d.y;

  for (std::size_t j = 0; j < k; ++j) {
    double* cj = a.data() + j * n;
    double norm = 0.0;
    for (std::size_t i = j; i < n; ++i) norm += cj[i] * cj[i];
    norm = std::sqrt(norm);
    const double tol = 1e-10 * std::max(std::sqrt(col_norm[j]), 1e-300);
    if (norm <= tol) {
      fail(ErrorCode::numeric, "rank-deficient design: column '" + d.columns[j] +
                                   "' is a linear combination of earlier columns");
    }
    const double alpha = cj[j] > 0 ? -norm : norm;
    // v = x - alpha e1, stored in place; H = I - 2 v v' / v'v
    cj[j] -= alpha;
    double vtv = 0.0;
    for (std::size_t i = j; i < n; ++i) vtv += cj[i] * cj[i];
    auto reflect = [&](double* target) {
      double s = 0.0;
      for (std::size_t i = j; i < n; ++i) s += cj[i] * target[i];
      s = 2.0 * s / vtv;
      for (std::size_t i = j; i < n; ++i) target[i] -= s * cj[i];
    };
    for (std::size_t c = j + 1; c < k; ++c) reflect(a.data() + c * n);
    reflect(qty.data());
    cj[j] = alpha;  // diagonal of R; the rest of the column is no longer needed
  }
  auto r_at = [&](std::size_t i, std::size_t j) { return a[j * n + i]; };

  std::vector<double> beta(k);
  for (std::size_t ii = k; ii-- > 0;) {
    double s = qty[ii];
    for (std::size_t j = ii + 1; j < k; ++j) s -= r_at(ii, j) * beta[j];
    beta[ii] = s / r_at(ii, ii);
  }

  // R^-1, upper triangular
  std::vector<double> rinv(k * k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t ii = c + 1; ii-- > 0;) {
      double s = ii == c ? 1.0 : 0.0;
      for (std::size_t j = ii + 1; j <= c; ++j) s -= r_at(ii, j) * rinv[j * k + c];
      rinv[ii * k + c] = s / r_at(ii, ii);
    }
  }

  RegressionResult res;
  res.n_obs = n;
  res.dof = n - k;
  res.residuals.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    double fit = 0.0;
    for (std::size_t c = 0; c < k; ++c) fit += d.at(r, c) * beta[c];
    res.residuals[r] = d.y[r] - fit;
    res.rss += res.residuals[r] * res.residuals[r];
  }
  res.mse = res.rss / static_cast<double>(n);
  const double sigma2 = res.rss / static_cast<double>(res.dof);

  for (std::size_t c = 0; c < k; ++c) {
    double var = 0.0;
    for (std::size_t j = c; j < k; ++j) var += rinv[c * k + j] * rinv[c * k + j];
    Coefficient co;
    co.name = d.columns[c];
    co.estimate = beta[c];
    co.std_error = std::sqrt(var * sigma2);
    if (co.std_error > 0.0) {
      co.t_stat = co.estimate / co.std_error;
    } else {
      co.t_stat = co.estimate == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), co.estimate);
    }
    co.p_value = t_pvalue(co.t_stat, static_cast<double>(res.dof));
    res.coef.push_back(std::move(co));
  }
  return res;
}

}  // namespace infl::econo
