#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "corpus.hpp"
#include "sentiment_index.hpp"

namespace infl::config {

// key = value lines; "[section]" prefixes following keys with "section.".
// '#' starts a comment outside double quotes; quoted values are unquoted.
class RawConfig {
 public:
  [[nodiscard]] static RawConfig parse(std::string_view text, const std::string& origin);
  [[nodiscard]] static RawConfig load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
  [[nodiscard]] const std::map<std::string, std::string>& values() const { return values_; }
  // Directory that relative paths are resolved against.
  std::filesystem::path base_dir = ".";

 private:
  std::map<std::string, std::string> values_;
};

enum class ScoreSource { model, external };

struct PipelineConfig {
  std::filesystem::path base_dir;

  // inputs; relative strings as written, resolved through resolve()
  std::map<std::string, std::string> paths;

  std::vector<sentiment::Period> periods = sentiment::default_periods();
  std::uint64_t seed = 42;

  classify::FeatureKind feature = classify::FeatureKind::tfidf;
  classify::ModelKind model = classify::ModelKind::mnb;
  double alpha = 1.0;
  classify::LogRegOptions logreg;
  double svm_reg = 1e-3;
  int svm_epochs = 50;
  std::size_t min_df = 1;
  double train_fraction = 0.8;
  std::string model_file = "model.txt";  // relative to the output directory

  bool drop_user_token = false;
  bool remove_stopwords = true;
  bool stem = true;

  ScoreSource score_source = ScoreSource::model;
  std::vector<Region> index_regions = {Region::ALL, Region::US, Region::GB};
  std::size_t min_n = 1;

  std::optional<std::size_t> ar_p;  // nullopt: chosen by select_lag
  std::size_t ar_max_p = 2;

  [[nodiscard]] DateRange window() const {
    return {periods.front().range.begin, periods.back().range.end};
  }
  [[nodiscard]] bool has_path(const std::string& key) const;
  // Absolute path of an input; throws if the key is not configured.
  [[nodiscard]] std::filesystem::path resolve(const std::string& key) const;
  // Canonical key=value text of every effective setting, sorted by key.
  [[nodiscard]] std::string canonical() const;
  void validate() const;
};

inline const std::vector<std::string> kPathKeys = {
    "tweets",   "labels",  "trends",    "yields_us",       "yields_gb", "lexicon",
    "stopwords", "emoji_ranges", "keywords", "regions", "external_scores"};

[[nodiscard]] std::uint64_t parse_seed(const std::string& v);
[[nodiscard]] PipelineConfig build(const RawConfig& raw);

}  // namespace infl::config
