#pragma once

#include <string>
#include <vector>

#include "sentiment_index.hpp"

namespace infl::svg {

struct Series {
  std::string label;
  std::vector<std::pair<Date, double>> points;
};

// Line chart of one or more date-indexed series sharing an x axis.
[[nodiscard]] std::string line_chart(const std::string& title, const std::vector<Series>& series,
                                     int width = 800, int height = 260);

// Two stacked panels: daily mean score and 30-observation rolling volatility.
[[nodiscard]] std::string index_chart(Region region,
                                      const std::vector<sentiment::DailyIndexPoint>& points,
                                      const std::vector<sentiment::VolPoint>& vols);

[[nodiscard]] std::string escape(std::string_view text);

}  // namespace infl::svg
