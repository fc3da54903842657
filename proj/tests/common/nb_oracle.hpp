#pragma once

// Naive Bayes fixtures and direct evaluation of the closed-form rules,
// written independently of the library's training code.

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "helpers.hpp"
#include "util.hpp"

namespace testing {

using infl::Sentiment;
using infl::classify::Dataset;
namespace vectorize = infl::vectorize;

inline vectorize::SparseVec sparse(std::vector<std::pair<std::uint32_t, double>> entries) {
  std::sort(entries.begin(), entries.end());
  vectorize::SparseVec v;
  for (auto [i, w] : entries) v.entries.push_back({i, w});
  return v;
}

struct NbFixture {
  std::string name;
  double alpha = 1.0;
  Dataset train;
  std::vector<vectorize::SparseVec> tests;
};

inline vectorize::SparseVec parse_entries(std::istringstream& in) {
  std::vector<std::pair<std::uint32_t, double>> entries;
  for (std::string tok; in >> tok;) {
    auto colon = tok.find(':');
    entries.emplace_back(static_cast<std::uint32_t>(*infl::parse_int(tok.substr(0, colon))),
                         *infl::parse_double(tok.substr(colon + 1)));
  }
  return sparse(entries);
}

inline std::vector<NbFixture> load_nb_fixtures() {
  std::ifstream file(source_path("tests/data/nb_fixtures.txt"));
  std::vector<NbFixture> out;
  NbFixture cur;
  for (std::string line; std::getline(file, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string key;
    in >> key;
    if (key == "fixture") {
      cur = NbFixture{};
      in >> cur.name;
    } else if (key == "dim") {
      in >> cur.train.dim;
    } else if (key == "alpha") {
      in >> cur.alpha;
    } else if (key == "train") {
      int label = 0;
      in >> label;
      cur.train.labels.push_back(static_cast<Sentiment>(label));
      cur.train.features.push_back(parse_entries(in));
    } else if (key == "test") {
      cur.tests.push_back(parse_entries(in));
    } else if (key == "end") {
      out.push_back(cur);
    }
  }
  return out;
}

inline std::vector<double> dense(const vectorize::SparseVec& x, std::size_t dim) {
  std::vector<double> d(dim, 0.0);
  for (const auto& e : x.entries) d[e.index] = e.weight;
  return d;
}

// Direct evaluation of the multinomial rule: log prior plus sum of
// f_i * log((count_ci + alpha) / (total_c + alpha * V)).
inline std::array<std::optional<double>, 3> mnb_oracle(const NbFixture& f, const vectorize::SparseVec& x) {
  const std::size_t V = f.train.dim;
  const auto xd = dense(x, V);
  std::array<std::optional<double>, 3> out;
  for (int c = -1; c <= 1; ++c) {
    double n_c = 0, total = 0;
    std::vector<double> count(V, 0.0);
    for (std::size_t r = 0; r < f.train.size(); ++r) {
      if (static_cast<int>(f.train.labels[r]) != c) continue;
      n_c += 1;
      const auto d = dense(f.train.features[r], V);
      for (std::size_t i = 0; i < V; ++i) {
        count[i] += d[i];
        total += d[i];
      }
    }
    if (n_c == 0) continue;
    double s = std::log(n_c / static_cast<double>(f.train.size()));
    for (std::size_t i = 0; i < V; ++i) s += xd[i] * std::log((count[i] + f.alpha) / (total + f.alpha * V));
    out[c + 1] = s;
  }
  return out;
}

// Direct evaluation of the complement rule with per-class L1 weight normalization.
inline std::array<std::optional<double>, 3> cnb_oracle(const NbFixture& f, const vectorize::SparseVec& x) {
  const std::size_t V = f.train.dim;
  const auto xd = dense(x, V);
  std::array<std::optional<double>, 3> out;
  for (int c = -1; c <= 1; ++c) {
    bool present = false;
    double total = 0;
    std::vector<double> count(V, 0.0);
    for (std::size_t r = 0; r < f.train.size(); ++r) {
      if (static_cast<int>(f.train.labels[r]) == c) {
        present = true;
        continue;
      }
      const auto d = dense(f.train.features[r], V);
      for (std::size_t i = 0; i < V; ++i) {
        count[i] += d[i];
        total += d[i];
      }
    }
    if (!present) continue;
    std::vector<double> w(V);
    double norm = 0;
    for (std::size_t i = 0; i < V; ++i) {
      w[i] = std::log((f.alpha + count[i]) / (f.alpha * V + total));
      norm += std::fabs(w[i]);
    }
    double s = 0;
    for (std::size_t i = 0; i < V; ++i) s += xd[i] * w[i] / norm;
    out[c + 1] = s;
  }
  return out;
}

inline Sentiment pick(const std::array<std::optional<double>, 3>& s, bool minimize) {
  int best = -1;
  for (int c = 0; c < 3; ++c) {
    if (!s[c]) continue;
    if (best < 0 || (minimize ? *s[c] < *s[best] : *s[c] > *s[best])) best = c;
  }
  return infl::class_at(best);
}

}  // namespace testing
