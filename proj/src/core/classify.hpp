#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "lexicon.hpp"
#include "vectorize.hpp"

namespace infl::classify {

using vectorize::SparseVec;

enum class Split { train, valid, test };

struct Dataset {
  std::vector<SparseVec> features;
  std::vector<Sentiment> labels;
  std::size_t dim = 0;
  std::vector<Split> tags;  // empty until split() assigns them

  [[nodiscard]] std::size_t size() const { return labels.size(); }
  [[nodiscard]] Dataset subset(Split which) const;
  [[nodiscard]] std::array<std::size_t, 3> class_counts() const;
  void validate() const;
};

// Lexicon features as a 3-dimensional sparse vector (neg, neu, pos).
[[nodiscard]] SparseVec lex_to_sparse(const lexicon::LexFeatures& f);
inline constexpr std::size_t kLexDim = 3;

// Deterministic shuffle under `seed`, then consecutive blocks sized by
// `fractions` (train, valid[, test]) using largest-remainder rounding.
[[nodiscard]] Dataset split(const Dataset& data, std::span<const double> fractions,
                            std::uint64_t seed, bool stratified = false);

enum class ModelKind { mnb, cnb, logreg, linsvm };
enum class FeatureKind { lex, tfidf };

[[nodiscard]] std::string_view model_kind_name(ModelKind k);
[[nodiscard]] std::optional<ModelKind> parse_model_kind(std::string_view s);
[[nodiscard]] std::string_view feature_kind_name(FeatureKind k);
[[nodiscard]] std::optional<FeatureKind> parse_feature_kind(std::string_view s);

// Linear decision rule over the fixed class order [-1, 0, +1]:
//   score_c = bias_c + sum_i f_i * weight(c, i)
// MNB, logistic regression and SVM predict the arg max; CNB predicts the
// arg min. Classes absent from the training data are inactive and never
// predicted. Ties go to the lower class value.
struct Model {
  ModelKind kind = ModelKind::mnb;
  FeatureKind feature = FeatureKind::tfidf;
  std::size_t dim = 0;
  std::array<bool, 3> active{true, true, true};
  std::array<double, 3> bias{0.0, 0.0, 0.0};
  std::vector<double> weights;  // 3 x dim, row per class

  [[nodiscard]] double weight(int cls, std::size_t i) const { return weights[cls * dim + i]; }
  [[nodiscard]] std::array<double, 3> scores(const SparseVec& x) const;
  [[nodiscard]] Sentiment predict(const SparseVec& x) const;

  void validate() const;
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] static Model from_text(const std::string& text, const std::string& origin);
  void save(const std::string& path) const;
  [[nodiscard]] static Model load(const std::string& path);
};

[[nodiscard]] Model train_mnb(const Dataset& train, double alpha = 1.0);
[[nodiscard]] Model train_cnb(const Dataset& train, double alpha = 1.0);

struct LogRegOptions {
  double l2 = 1e-3;
  double lr = 0.5;
  int iters = 500;
};

// Full-batch gradient descent on mean cross-entropy + (l2/2)|W|^2 from zero
// initialization. `loss_trace`, when given, receives the loss before each step.
[[nodiscard]] Model train_logreg(const Dataset& train, const LogRegOptions& opt = {},
                                 std::vector<double>* loss_trace = nullptr);

struct SvmOptions {
  double reg = 1e-3;
  int epochs = 50;
  std::uint64_t seed = 0;
};

// One-vs-rest Pegasos; the bias is an extra constant feature and is
// regularized with the weights.
[[nodiscard]] Model train_linsvm(const Dataset& train, const SvmOptions& opt = {});

struct EvalReport {
  std::size_t n = 0;
  double accuracy = 0.0;  // percent
  double fp_rate = 0.0;   // percent: predicted +1 among true != +1
  double fn_rate = 0.0;   // percent: predicted -1 among true != -1
  std::array<std::array<std::size_t, 3>, 3> confusion{};  // [true][predicted]
};

[[nodiscard]] EvalReport evaluate_predictions(std::span<const Sentiment> truth,
                                              std::span<const Sentiment> predicted);
[[nodiscard]] EvalReport evaluate(const Model& model, const Dataset& data);

// Objectives of the gradient-trained models. Parameter layout: the 3 x dim
// weights row by row, then the 3 biases.
struct Objective {
  double loss = 0.0;
  std::vector<double> grad;
};
[[nodiscard]] Objective logreg_objective(const Dataset& data, std::span<const double> params,
                                         double l2);
[[nodiscard]] Objective linsvm_objective(const Dataset& data, std::span<const double> params,
                                         double reg);

// Max relative discrepancy between the analytic gradient and central
// differences with step eps, at a fixed non-trivial parameter point.
[[nodiscard]] double gradient_check(ModelKind kind, const Dataset& toy, double eps);

struct ScoredTweet {
  std::string tweet_id;
  Sentiment score;
};

struct ExternalScores {
  std::vector<ScoredTweet> scores;
  std::vector<std::string> warnings;
  std::size_t unknown_ids = 0;
};

// CSV tweet_id,score with score in {-1,0,1}. Ids missing from `known_ids`
// (when given) are kept but reported as warnings.
[[nodiscard]] ExternalScores ingest_external_scores(
    const std::string& path, const std::unordered_set<std::string>* known_ids = nullptr);

[[nodiscard]] std::vector<ScoredTweet> score_tweets(
    const Model& model, const std::vector<std::pair<std::string, SparseVec>>& docs);

[[nodiscard]] std::string scores_to_csv(const std::vector<ScoredTweet>& scores);

}  // namespace infl::classify
