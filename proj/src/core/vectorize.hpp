#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace infl::vectorize {

struct SparseEntry {
  std::uint32_t index;
  double weight;
};

// Indices strictly increasing, weights finite and nonzero.
struct SparseVec {
  std::vector<SparseEntry> entries;

  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] double norm() const;
};

class Vocabulary {
 public:
  Vocabulary() = default;

  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::size_t n_docs() const { return n_docs_; }
  [[nodiscard]] const std::string& term(std::size_t i) const { return terms_[i]; }
  [[nodiscard]] std::size_t df(std::size_t i) const { return df_[i]; }
  // -1 if absent.
  [[nodiscard]] long index_of(const std::string& term) const;
  // Smoothed idf: ln((1 + n_docs) / (1 + df)) + 1.
  [[nodiscard]] double idf(std::size_t i) const;

  void save_csv(const std::string& path) const;
  [[nodiscard]] std::string to_csv() const;
  [[nodiscard]] static Vocabulary load_csv(const std::string& path);

  friend Vocabulary fit_vocab(const std::vector<std::vector<std::string>>& docs,
                              std::size_t min_df);

 private:
  void add(std::string term, std::size_t df);

  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::size_t n_docs_ = 0;
};

// Terms with document frequency >= min_df, indexed in first-seen order.
[[nodiscard]] Vocabulary fit_vocab(const std::vector<std::vector<std::string>>& docs,
                                   std::size_t min_df = 1);

// Raw-count tf times smoothed idf, L2 normalized; out-of-vocabulary terms are
// ignored and a doc with no known terms maps to the empty vector.
[[nodiscard]] SparseVec transform(const std::vector<std::string>& doc, const Vocabulary& vocab);

}  // namespace infl::vectorize
