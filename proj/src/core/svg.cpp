#include "svg.hpp"

#include <algorithm>
#include <limits>

#include "util.hpp"

namespace infl::svg {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
constexpr int kLeft = 60, kRight = 20, kTop = 30, kBottom = 40;

std::string num(double v) { return format_fixed(v, 2); }

// Chart body translated to (0, y_offset).
std::string panel(const std::string& title, const std::vector<Series>& series, int width,
                  int height, int y_offset) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  Date first = Date::max(), last = Date::min();
  for (const auto& s : series) {
    for (const auto& [d, v] : s.points) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      first = std::min(first, d);
      last = std::max(last, d);
    }
  }
  std::string out = "<g transform=\"translate(0," + std::to_string(y_offset) + ")\">\n";
  out += "<text x=\"" + std::to_string(width / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  const int plot_w = width - kLeft - kRight;
  const int plot_h = height - kTop - kBottom;
  out += "<rect x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(kTop) + "\" width=\"" +
         std::to_string(plot_w) + "\" height=\"" + std::to_string(plot_h) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  if (first > last) {
    out += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" + std::to_string(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\">no data</text>\n</g>\n";
    return out;
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double span_days = std::max(1.0, static_cast<double>((last - first).count()));
  auto px = [&](Date d) { return kLeft + plot_w * static_cast<double>((d - first).count()) / span_days; };
  auto py = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };

  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].points.empty()) continue;
    out += "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"" + std::string(kColors[i % 4]) +
           "\" points=\"";
    for (std::size_t k = 0; k < series[i].points.size(); ++k) {
      const auto& [d, v] = series[i].points[k];
      out += (k ? " " : "") + num(px(d)) + "," + num(py(v));
    }
    out += "\"/>\n";
    out += "<text x=\"" + std::to_string(kLeft + 8) + "\" y=\"" + std::to_string(kTop + 14 + 14 * static_cast<int>(i)) +
           "\" font-size=\"11\" fill=\"" + kColors[i % 4] + "\">" + escape(series[i].label) + "</text>\n";
  }
  const int base = kTop + plot_h;
  out += "<text x=\"" + std::to_string(kLeft - 4) + "\" y=\"" + std::to_string(kTop + 4) +
         "\" text-anchor=\"end\" font-size=\"10\">" + num(hi) + "</text>\n";
  out += "<text x=\"" + std::to_string(kLeft - 4) + "\" y=\"" + std::to_string(base) +
         "\" text-anchor=\"end\" font-size=\"10\">" + num(lo) + "</text>\n";
  out += "<text x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(base + 16) +
         "\" font-size=\"10\">" + format_date(first) + "</text>\n";
  out += "<text x=\"" + std::to_string(kLeft + plot_w) + "\" y=\"" + std::to_string(base + 16) +
         "\" text-anchor=\"end\" font-size=\"10\">" + format_date(last) + "</text>\n";
  out += "</g>\n";
  return out;
}

std::string document(int width, int height, const std::string& body) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\" font-family=\"sans-serif\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body + "</svg>\n";
}

}  // namespace

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string line_chart(const std::string& title, const std::vector<Series>& series, int width,
                       int height) {
  return document(width, height, panel(title, series, width, height, 0));
}

std::string index_chart(Region region, const std::vector<sentiment::DailyIndexPoint>& points,
                        const std::vector<sentiment::VolPoint>& vols) {
  constexpr int width = 800, height = 260;
  Series mean{"mean score", {}};
  for (const auto& p : points) mean.points.emplace_back(p.date, p.mean_score);
  Series vol{"M.Vol(30)", {}};
  for (const auto& v : vols) vol.points.emplace_back(v.date, v.vol);
  const std::string name(region_name(region));
  return document(width, 2 * height,
                  panel(name + " daily sentiment index", {mean}, width, height, 0) +
                      panel(name + " 30-observation rolling volatility", {vol}, width, height, height));
}

}  // namespace infl::svg
