#include "vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "csv.hpp"
#include "error.hpp"
#include "util.hpp"

namespace infl::vectorize {

double SparseVec::norm() const {
  double ss = 0.0;
  for (const auto& e : entries) ss += e.weight * e.weight;
  return std::sqrt(ss);
}

long Vocabulary::index_of(const std::string& term) const {
  auto it = lookup_.find(term);
  return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

double Vocabulary::idf(std::size_t i) const {
  return std::log((1.0 + static_cast<double>(n_docs_)) / (1.0 + static_cast<double>(df_[i]))) +
         1.0;
}

void Vocabulary::add(std::string term, std::size_t df) {
  lookup_.emplace(term, terms_.size());
  terms_.push_back(std::move(term));
  df_.push_back(df);
}

std::string Vocabulary::to_csv() const {
  std::string out = "n_docs," + std::to_string(n_docs_) + "\nterm,index,df\n";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    out += csv::join({terms_[i], std::to_string(i), std::to_string(df_[i])}) + "\n";
  }
  return out;
}

void Vocabulary::save_csv(const std::string& path) const { write_file(path, to_csv()); }

Vocabulary Vocabulary::load_csv(const std::string& path) {
  auto rows = csv::parse(read_file(path));
  if (rows.size() < 2 || rows[0].fields.size() != 2 || rows[0].fields[0] != "n_docs" ||
      rows[1].fields != std::vector<std::string>{"term", "index", "df"}) {
    fail(ErrorCode::parse, path + ": not a vocabulary file");
  }
  Vocabulary v;
  auto n = parse_int(rows[0].fields[1]);
  if (!n || *n < 1) fail(ErrorCode::parse, path + ": bad n_docs");
  v.n_docs_ = static_cast<std::size_t>(*n);
  for (std::size_t r = 2; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    auto idx = f.size() == 3 ? parse_int(f[1]) : std::nullopt;
    auto df = f.size() == 3 ? parse_int(f[2]) : std::nullopt;
    if (!idx || !df || *idx != static_cast<long long>(v.size()) || *df < 1 ||
        static_cast<std::size_t>(*df) > v.n_docs_ || v.lookup_.count(f[0])) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(rows[r].line) + ": bad vocabulary row");
    }
    v.add(f[0], static_cast<std::size_t>(*df));
  }
  return v;
}

Vocabulary fit_vocab(const std::vector<std::vector<std::string>>& docs, std::size_t min_df) {
  if (docs.empty()) fail(ErrorCode::invalid_argument, "fit_vocab: no documents");
  if (min_df < 1) fail(ErrorCode::invalid_argument, "fit_vocab: min_df must be >= 1");

  std::vector<std::string> order;
  std::unordered_map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::unordered_set<std::string_view> seen;
    for (const auto& t : doc) {
      if (!seen.insert(t).second) continue;
      auto [it, inserted] = df.emplace(t, 0);
      if (inserted) order.push_back(t);
      ++it->second;
    }
  }
  Vocabulary v;
  v.n_docs_ = docs.size();
  for (auto& t : order) {
    const std::size_t d = df[t];
    if (d >= min_df) v.add(std::move(t), d);
  }
  if (v.size() == 0) fail(ErrorCode::invalid_argument, "empty vocabulary");
  return v;
}

SparseVec transform(const std::vector<std::string>& doc, const Vocabulary& vocab) {
  std::map<std::uint32_t, double> counts;
  for (const auto& t : doc) {
    long i = vocab.index_of(t);
    if (i >= 0) counts[static_cast<std::uint32_t>(i)] += 1.0;
  }
  SparseVec out;
  out.entries.reserve(counts.size());
  double ss = 0.0;
  for (const auto& [i, tf] : counts) {
    const double w = tf * vocab.idf(i);
    out.entries.push_back({i, w});
    ss += w * w;
  }
  if (ss > 0.0) {
    const double inv = 1.0 / std::sqrt(ss);
    for (auto& e : out.entries) e.weight *= inv;
  }
  return out;
}

}  // namespace infl::vectorize
