#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "util.hpp"

namespace infl::report {

using nlohmann::json;

std::string_view stars(double p) {
  if (p < 0.01) return "***";
  if (p < 0.05) return "**";
  if (p < 0.10) return "*";
  return "";
}

std::string format_coef(double v, int decimals) {
  if (!std::isfinite(v)) return format_double(v);
  if (v != 0.0 && std::fabs(v) < std::pow(10.0, -decimals)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
  }
  return format_fixed(v, decimals);
}

json to_json(const econo::RegressionResult& r) {
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  json cols = json::array(), est = json::array(), se = json::array(), t = json::array(),
       p = json::array();
  for (const auto& c : r.coef) {
    cols.push_back(c.name);
    est.push_back(num(c.estimate));
    se.push_back(num(c.std_error));
    t.push_back(num(c.t_stat));
    p.push_back(num(c.p_value));
  }
  return json{{"columns", cols}, {"estimate", est}, {"se", se}, {"t", t}, {"p", p},
              {"mse", num(r.mse)}, {"n", r.n_obs}, {"dof", r.dof}};
}

std::string table4_header() { return "Feature\tModel\tTrain (%)\tValid (%)\tFP (%)\tFN (%)\n"; }

std::string table4_row(classify::FeatureKind f, classify::ModelKind m,
                       const classify::EvalReport& train, const classify::EvalReport& valid) {
  return std::string(classify::feature_kind_name(f)) + "\t" +
         std::string(classify::model_kind_name(m)) + "\t" + format_fixed(train.accuracy, 2) + "\t" +
         format_fixed(valid.accuracy, 2) + "\t" + format_fixed(valid.fp_rate, 2) + "\t" +
         format_fixed(valid.fn_rate, 2) + "\n";
}

namespace {

std::string cell(const econo::Coefficient& c, int p_decimals) {
  return format_coef(c.estimate) + std::string(stars(c.p_value)) + "\t(" +
         format_fixed(c.p_value, p_decimals) + ")";
}

const econo::Coefficient* find(const econo::RegressionResult& r, const std::string& name) {
  for (const auto& c : r.coef) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

std::string render_trend_table(const std::vector<econo::PeriodFit>& fits) {
  std::vector<Region> regions;
  std::vector<sentiment::PeriodName> periods;
  for (const auto& f : fits) {
    if (std::find(regions.begin(), regions.end(), f.region) == regions.end()) regions.push_back(f.region);
    if (std::find(periods.begin(), periods.end(), f.period) == periods.end()) periods.push_back(f.period);
  }
  std::sort(periods.begin(), periods.end());

  std::string out = "\t";
  for (auto p : periods) out += "\t" + std::string(sentiment::period_name(p)) + "\t";
  out += "\n";
  for (auto region : regions) {
    std::size_t max_p = 0;
    bool any_trend = false;
    for (const auto& f : fits) {
      if (f.region != region || !f.fit) continue;
      max_p = std::max(max_p, f.p);
      any_trend = any_trend || find(*f.fit, "t") != nullptr;
    }
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= max_p; ++j) names.push_back("L(" + std::to_string(j) + ")");
    if (any_trend) names.push_back("t");
    names.push_back("const");

    bool first = true;
    for (const auto& name : names) {
      out += first ? std::string(region_name(region)) : std::string();
      out += "\t" + name;
      first = false;
      for (auto p : periods) {
        const econo::PeriodFit* fit = nullptr;
        for (const auto& f : fits) {
          if (f.region == region && f.period == p) fit = &f;
        }
        const econo::Coefficient* c = fit && fit->fit ? find(*fit->fit, name) : nullptr;
        out += c ? "\t" + cell(*c, 2) : std::string("\t\t");
      }
      out += "\n";
    }
    for (const auto& f : fits) {
      if (f.region == region && !f.fit) {
        out += std::string(region_name(region)) + "\t" +
               std::string(sentiment::period_name(f.period)) + ": " + f.note + "\n";
      }
    }
  }
  return out;
}

std::string render_eq1_table(std::string_view title, const std::vector<Eq1Column>& columns) {
  static const std::vector<std::string> names = {"const", "Defl", "Infl", "Neu", "Senti", "L(1)", "L(2)"};
  std::string out(title);
  for (const auto& c : columns) out += "\t" + c.label + "\t";
  out += "\n";
  for (const auto& name : names) {
    std::string est_line = name;
    std::string p_line;
    for (const auto& col : columns) {
      for (const auto* r : {col.pair ? &col.pair->ar : nullptr, col.pair ? &col.pair->exog : nullptr}) {
        const econo::Coefficient* c = r ? find(*r, name) : nullptr;
        est_line += "\t" + (c ? format_coef(c->estimate) + std::string(stars(c->p_value)) : std::string());
        p_line += "\t" + (c ? "(" + format_fixed(c->p_value, 3) + ")" : std::string());
      }
    }
    out += est_line + "\n" + p_line + "\n";
  }
  std::string n_line = "n";
  for (const auto& col : columns) {
    for (const auto* r : {col.pair ? &col.pair->ar : nullptr, col.pair ? &col.pair->exog : nullptr}) {
      n_line += "\t" + (r ? std::to_string(r->n_obs) : std::string("-"));
    }
  }
  out += n_line + "\n";
  for (const auto& col : columns) {
    if (!col.pair) out += col.label + ": " + col.note + "\n";
  }
  return out;
}

}  // namespace infl::report
