#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "classify.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "nb_oracle.hpp"
#include "util.hpp"

using namespace infl;
using namespace infl::classify;
using namespace testing;

namespace {

// Three well separated clusters in 4 dimensions.
Dataset toy_dataset(std::uint64_t seed, std::size_t n = 60) {
  Rng rng(seed);
  Dataset d;
  d.dim = 4;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = static_cast<int>(i % 3);
    std::vector<std::pair<std::uint32_t, double>> e;
    e.emplace_back(static_cast<std::uint32_t>(c), 1.0 + 0.2 * rng.uniform());
    e.emplace_back(3u, 0.1 + 0.5 * rng.uniform());
    d.features.push_back(sparse(e));
    d.labels.push_back(class_at(c));
  }
  return d;
}

}  // namespace

TEST_CASE("MNB and CNB match direct evaluation of their rules on every fixture") {
  const auto fixtures = load_nb_fixtures();
  REQUIRE(fixtures.size() == 5);
  for (const auto& f : fixtures) {
    CAPTURE(f.name);
    CHECK(f.train.size() <= 5);
    const auto mnb = train_mnb(f.train, f.alpha);
    const auto cnb = train_cnb(f.train, f.alpha);
    for (const auto& x : f.tests) {
      const auto s_mnb = mnb.scores(x);
      const auto s_cnb = cnb.scores(x);
      const auto o_mnb = mnb_oracle(f, x);
      const auto o_cnb = cnb_oracle(f, x);
      for (int c = 0; c < 3; ++c) {
        CHECK(mnb.active[c] == o_mnb[c].has_value());
        if (o_mnb[c]) CHECK(std::fabs(s_mnb[c] - *o_mnb[c]) <= 1e-12);
        if (o_cnb[c]) CHECK(std::fabs(s_cnb[c] - *o_cnb[c]) <= 1e-12);
      }
      CHECK(mnb.predict(x) == pick(o_mnb, false));
      CHECK(cnb.predict(x) == pick(o_cnb, true));
    }
  }
}

TEST_CASE("hand-computed MNB posterior on the two-doc fixture") {
  const auto f = load_nb_fixtures().front();
  REQUIRE(f.name == "two_doc_two_term");
  const auto m = train_mnb(f.train, 1.0);
  // class +1: counts (2,1), total 3 -> theta (3/5, 2/5); class -1: (0,3) -> (1/5, 4/5)
  const auto s = m.scores(sparse({{0, 1.0}}));
  CHECK(std::fabs(s[2] - (std::log(0.5) + std::log(3.0 / 5.0))) <= 1e-12);
  CHECK(std::fabs(s[0] - (std::log(0.5) + std::log(1.0 / 5.0))) <= 1e-12);
  CHECK(m.predict(sparse({{0, 1.0}})) == Sentiment::positive);
  CHECK(m.predict(sparse({{1, 1.0}})) == Sentiment::negative);
}

TEST_CASE("symmetric features tie toward the lower class") {
  for (const auto& f : load_nb_fixtures()) {
    if (f.name != "symmetric_tie") continue;
    for (const auto& x : f.tests) {
      CHECK(train_mnb(f.train).predict(x) == Sentiment::negative);
      CHECK(train_cnb(f.train).predict(x) == Sentiment::negative);
    }
  }
}

TEST_CASE("single-class MNB always predicts that class") {
  Dataset d;
  d.dim = 2;
  d.features = {sparse({{0, 1.0}}), sparse({{1, 2.0}})};
  d.labels = {Sentiment::positive, Sentiment::positive};
  const auto m = train_mnb(d);
  CHECK(m.predict(sparse({{0, 5.0}})) == Sentiment::positive);
  CHECK(m.predict(sparse({})) == Sentiment::positive);
  CHECK_THROWS_AS((void)train_cnb(d), Error);
}

TEST_CASE("with a huge alpha MNB follows the priors") {
  Dataset d;
  d.dim = 2;
  d.features = {sparse({{0, 5.0}}), sparse({{0, 5.0}}), sparse({{1, 5.0}}), sparse({{1, 4.0}}),
                sparse({{1, 3.0}})};
  d.labels = {Sentiment::negative, Sentiment::negative, Sentiment::neutral, Sentiment::neutral,
              Sentiment::neutral};
  const auto m = train_mnb(d, 1e6);
  CHECK(m.predict(sparse({{0, 1.0}})) == Sentiment::neutral);
  CHECK(train_mnb(d, 1.0).predict(sparse({{0, 1.0}})) == Sentiment::negative);
}

TEST_CASE("naive Bayes rejects negative features and bad alpha") {
  Dataset d;
  d.dim = 1;
  d.features = {sparse({{0, -1.0}}), sparse({{0, 1.0}})};
  d.labels = {Sentiment::negative, Sentiment::positive};
  CHECK_THROWS_AS((void)train_mnb(d), Error);
  d.features[0] = sparse({{0, 1.0}});
  CHECK_THROWS_AS((void)train_mnb(d, 0.0), Error);
}

TEST_CASE("logreg objective matches a direct softmax cross-entropy") {
  const auto d = toy_dataset(3, 9);
  std::vector<double> p(3 * d.dim + 3);
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = 0.1 * static_cast<double>(j % 5) - 0.2;
  const double l2 = 0.05;
  double loss = 0;
  for (std::size_t r = 0; r < d.size(); ++r) {
    const auto x = dense(d.features[r], d.dim);
    double s[3], z = 0;
    for (int c = 0; c < 3; ++c) {
      s[c] = p[3 * d.dim + c];
      for (std::size_t i = 0; i < d.dim; ++i) s[c] += p[c * d.dim + i] * x[i];
      z += std::exp(s[c]);
    }
    loss += (std::log(z) - s[class_index(d.labels[r])]) / static_cast<double>(d.size());
  }
  for (std::size_t j = 0; j < 3 * d.dim; ++j) loss += 0.5 * l2 * p[j] * p[j];
  CHECK(logreg_objective(d, p, l2).loss == doctest::Approx(loss).epsilon(1e-13));
}

TEST_CASE("logreg analytic gradient matches central differences") {
  const auto d = toy_dataset(11, 12);
  CHECK(gradient_check(ModelKind::logreg, d, 1e-6) <= 1e-5);

  // independent finite differences at random points
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> p(3 * d.dim + 3);
    for (auto& v : p) v = rng.normal() * 0.5;
    const auto g = logreg_objective(d, p, 1e-3).grad;
    double worst = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      auto a = p, b = p;
      a[j] += 1e-6;
      b[j] -= 1e-6;
      const double num = (logreg_objective(d, a, 1e-3).loss - logreg_objective(d, b, 1e-3).loss) / 2e-6;
      worst = std::max(worst, std::fabs(num - g[j]) / std::max({std::fabs(num), std::fabs(g[j]), 1e-8}));
    }
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("logreg loss is non-increasing and training is reproducible") {
  const auto d = toy_dataset(4);
  std::vector<double> trace;
  const auto m1 = train_logreg(d, {}, &trace);
  REQUIRE(trace.size() == 500);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
  CHECK(trace.back() < trace.front());
  const auto m2 = train_logreg(d);
  CHECK(m1.weights == m2.weights);
  CHECK(evaluate(m1, d).accuracy == 100.0);
}

TEST_CASE("logreg reports an over-large learning rate") {
  // identical inputs with unbalanced labels: the optimum is finite, so a huge step overshoots
  Dataset d;
  d.dim = 1;
  for (int label : {-1, -1, -1, 0, 1}) {
    d.features.push_back(sparse({{0u, 1.0}}));
    d.labels.push_back(static_cast<Sentiment>(label));
  }
  CHECK_THROWS_AS((void)train_logreg(d, {0.0, 500.0, 50}), Error);
  CHECK_THROWS_AS((void)train_logreg(d, {0.0, 0.5, 0}), Error);
}

TEST_CASE("linear SVM separates clusters and is seed-reproducible") {
  const auto d = toy_dataset(8);
  const auto a = train_linsvm(d, {1e-3, 30, 5});
  const auto b = train_linsvm(d, {1e-3, 30, 5});
  CHECK(a.weights == b.weights);
  CHECK(evaluate(a, d).accuracy == 100.0);
  CHECK(gradient_check(ModelKind::linsvm, toy_dataset(2, 9), 1e-6) <= 1e-5);
}

TEST_CASE("evaluation arithmetic on six-example fixtures") {
  using S = Sentiment;
  {
    const std::vector<S> truth{S::negative, S::negative, S::neutral, S::neutral, S::positive, S::positive};
    const std::vector<S> pred{S::negative, S::positive, S::neutral, S::negative, S::positive, S::neutral};
    const auto r = evaluate_predictions(truth, pred);
    CHECK(r.n == 6);
    CHECK(r.accuracy == 50.0);
    CHECK(r.fp_rate == 25.0);  // one +1 among the four true non-positives
    CHECK(r.fn_rate == 25.0);  // one -1 among the four true non-negatives
    const std::array<std::array<std::size_t, 3>, 3> cm{{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}};
    CHECK(r.confusion == cm);
  }
  {
    const std::vector<S> truth{S::positive, S::positive, S::positive, S::neutral, S::negative, S::negative};
    const std::vector<S> pred(6, S::positive);
    const auto r = evaluate_predictions(truth, pred);
    CHECK(r.accuracy == 50.0);
    CHECK(r.fp_rate == 100.0);
    CHECK(r.fn_rate == 0.0);
    CHECK(r.confusion[2][2] == 3);
    CHECK(r.confusion[0][2] == 2);
  }
  {
    const std::vector<S> truth{S::negative, S::neutral, S::positive, S::negative, S::neutral, S::positive};
    const std::vector<S> pred{S::negative, S::negative, S::negative, S::negative, S::neutral, S::positive};
    const auto r = evaluate_predictions(truth, pred);
    CHECK(r.accuracy == doctest::Approx(400.0 / 6.0).epsilon(1e-15));
    CHECK(r.fp_rate == 0.0);
    CHECK(r.fn_rate == 50.0);
  }
  const std::vector<S> one{S::positive};
  CHECK_THROWS_AS((void)evaluate_predictions(one, std::vector<S>{}), Error);
}

TEST_CASE("split is a seeded partition with largest-remainder sizes") {
  auto d = toy_dataset(1, 11);
  const std::array<double, 3> fr{0.6, 0.2, 0.2};
  const auto a = split(d, fr, 9);
  const auto b = split(d, fr, 9);
  CHECK(a.tags == b.tags);
  CHECK(std::count(a.tags.begin(), a.tags.end(), Split::train) == 7);
  CHECK(std::count(a.tags.begin(), a.tags.end(), Split::valid) == 2);
  CHECK(std::count(a.tags.begin(), a.tags.end(), Split::test) == 2);
  CHECK(a.subset(Split::train).size() + a.subset(Split::valid).size() + a.subset(Split::test).size() == 11);
  const auto c = split(d, fr, 10);
  CHECK(c.tags != a.tags);
  const auto s = split(toy_dataset(1, 30), std::array<double, 2>{0.8, 0.2}, 3, true);
  const auto valid = s.subset(Split::valid);
  CHECK(valid.class_counts() == std::array<std::size_t, 3>{2, 2, 2});
  CHECK_THROWS_AS((void)split(d, std::array<double, 2>{0.5, 0.6}, 1), Error);
}

TEST_CASE("model text round trip preserves predictions") {
  const auto d = toy_dataset(6);
  for (auto m : {train_mnb(d), train_cnb(d), train_logreg(d), train_linsvm(d)}) {
    const auto back = Model::from_text(m.to_text(), "mem");
    CHECK(back.kind == m.kind);
    CHECK(back.weights == m.weights);
    CHECK(back.bias == m.bias);
    CHECK(back.active == m.active);
  }
  CHECK_THROWS_AS((void)Model::from_text("not a model", "mem"), Error);
}

TEST_CASE("external scores are validated") {
  auto dir = testing::scratch("external");
  const auto path = (dir / "s.csv").string();
  write_file(path, "tweet_id,score\na,1\nb,-1\nz,0\n");
  const std::unordered_set<std::string> known{"a", "b"};
  auto r = ingest_external_scores(path, &known);
  CHECK(r.scores.size() == 3);
  CHECK(r.unknown_ids == 1);
  CHECK(r.warnings.size() == 1);
  CHECK(scores_to_csv(r.scores) == "tweet_id,score\na,1\nb,-1\nz,0\n");
  write_file(path, "tweet_id,score\na,2\n");
  CHECK_THROWS_AS((void)ingest_external_scores(path), Error);
  write_file(path, "tweet_id,score\na,1\na,0\n");
  CHECK_THROWS_AS((void)ingest_external_scores(path), Error);
}
