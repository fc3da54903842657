#include "classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "csv.hpp"
#include "error.hpp"
#include "util.hpp"

namespace infl::classify {

namespace {

constexpr std::string_view kModelMagic = "inflsent-model";
constexpr int kModelVersion = 1;

int label_index(Sentiment s) { return class_index(s); }

double dot(const SparseVec& x, const double* row) {
  double s = 0.0;
  for (const auto& e : x.entries) s += e.weight * row[e.index];
  return s;
}

double row_sum(const SparseVec& x) {
  double s = 0.0;
  for (const auto& e : x.entries) s += e.weight;
  return s;
}

void require_nonnegative(const Dataset& d, const char* who) {
  for (const auto& x : d.features) {
    for (const auto& e : x.entries) {
      if (e.weight < 0.0) fail(ErrorCode::invalid_argument, std::string(who) + ": negative feature value");
    }
  }
}

std::array<bool, 3> present_classes(const Dataset& d) {
  auto counts = d.class_counts();
  return {counts[0] > 0, counts[1] > 0, counts[2] > 0};
}

// Counts of observations per split, largest remainder, every split >= 1.
std::vector<std::size_t> allocate(std::size_t n, std::span<const double> fractions) {
  const std::size_t k = fractions.size();
  std::vector<std::size_t> counts(k);
  std::vector<std::pair<double, std::size_t>> rema;
  std::size_t used = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double exact = fractions[j] * static_cast<double>(n);
    counts[j] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    used += counts[j];
    rema.emplace_back(exact - static_cast<double>(counts[j]), j);
  }
  std::stable_sort(rema.begin(), rema.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; used < n; ++r, ++used) ++counts[rema[r % k].second];
  return counts;
}

}  // namespace

// ---- dataset ---------------------------------------------------------------

Dataset Dataset::subset(Split which) const {
  if (tags.size() != labels.size()) fail(ErrorCode::state, "dataset has not been split");
  Dataset out;
  out.dim = dim;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (tags[i] != which) continue;
    out.features.push_back(features[i]);
    out.labels.push_back(labels[i]);
  }
  return out;
}

std::array<std::size_t, 3> Dataset::class_counts() const {
  std::array<std::size_t, 3> c{};
  for (auto l : labels) ++c[label_index(l)];
  return c;
}

void Dataset::validate() const {
  if (features.size() != labels.size()) {
    fail(ErrorCode::invalid_argument, "dataset: features and labels differ in length");
  }
  if (!tags.empty() && tags.size() != labels.size()) {
    fail(ErrorCode::invalid_argument, "dataset: split tags differ in length");
  }
  for (const auto& x : features) {
    long prev = -1;
    for (const auto& e : x.entries) {
      if (static_cast<long>(e.index) <= prev || e.index >= dim || !std::isfinite(e.weight)) {
        fail(ErrorCode::invalid_argument, "dataset: malformed sparse vector");
      }
      prev = e.index;
    }
  }
}

SparseVec lex_to_sparse(const lexicon::LexFeatures& f) {
  SparseVec v;
  const double vals[3] = {f.neg, f.neu, f.pos};
  for (std::uint32_t i = 0; i < 3; ++i) {
    if (vals[i] != 0.0) v.entries.push_back({i, vals[i]});
  }
  return v;
}

Dataset split(const Dataset& data, std::span<const double> fractions, std::uint64_t seed,
              bool stratified) {
  data.validate();
  if (fractions.size() < 2 || fractions.size() > 3) {
    fail(ErrorCode::invalid_argument, "split: need 2 or 3 fractions");
  }
  double total = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0)) fail(ErrorCode::invalid_argument, "split: fractions must be positive");
    total += f;
  }
  if (std::fabs(total - 1.0) > 1e-9) fail(ErrorCode::invalid_argument, "split: fractions must sum to 1");
  if (data.size() < fractions.size()) {
    fail(ErrorCode::invalid_argument, "split: fewer examples than splits");
  }

  Dataset out = data;
  out.tags.assign(data.size(), Split::train);
  Rng rng(seed);
  auto assign = [&](std::vector<std::size_t> idx, bool force_nonempty) {
    rng.shuffle(idx);
    auto counts = allocate(idx.size(), fractions);
    if (force_nonempty) {
      for (auto& c : counts) {
        if (c == 0) {
          ++c;
          --*std::max_element(counts.begin(), counts.end());
        }
      }
    }
    std::size_t pos = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      for (std::size_t k = 0; k < counts[j]; ++k) out.tags[idx[pos++]] = static_cast<Split>(j);
    }
  };

  if (!stratified) {
    std::vector<std::size_t> all(data.size());
    std::iota(all.begin(), all.end(), 0);
    assign(std::move(all), true);
  } else {
    for (int c = 0; c < 3; ++c) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (label_index(data.labels[i]) == c) idx.push_back(i);
      }
      if (!idx.empty()) assign(std::move(idx), false);
    }
  }
  return out;
}

// ---- names -----------------------------------------------------------------

std::string_view model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::mnb: return "mnb";
    case ModelKind::cnb: return "cnb";
    case ModelKind::logreg: return "logreg";
    case ModelKind::linsvm: return "linsvm";
  }
  return "mnb";
}

std::optional<ModelKind> parse_model_kind(std::string_view s) {
  const std::string l = ascii_lower(trim(s));
  if (l == "mnb") return ModelKind::mnb;
  if (l == "cnb") return ModelKind::cnb;
  if (l == "logreg") return ModelKind::logreg;
  if (l == "linsvm") return ModelKind::linsvm;
  return std::nullopt;
}

std::string_view feature_kind_name(FeatureKind k) {
  return k == FeatureKind::lex ? "lex" : "tfidf";
}

std::optional<FeatureKind> parse_feature_kind(std::string_view s) {
  const std::string l = ascii_lower(trim(s));
  if (l == "lex") return FeatureKind::lex;
  if (l == "tfidf") return FeatureKind::tfidf;
  return std::nullopt;
}

// ---- model ----------------------------------------------------------------

std::array<double, 3> Model::scores(const SparseVec& x) const {
  std::array<double, 3> s{};
  for (int c = 0; c < 3; ++c) s[c] = bias[c] + dot(x, weights.data() + c * dim);
  return s;
}

Sentiment Model::predict(const SparseVec& x) const {
  const auto s = scores(x);
  const bool minimize = kind == ModelKind::cnb;
  int best = -1;
  for (int c = 0; c < 3; ++c) {
    if (!active[c]) continue;
    if (best < 0 || (minimize ? s[c] < s[best] : s[c] > s[best])) best = c;
  }
  return class_at(best);
}

void Model::validate() const {
  if (weights.size() != 3 * dim) fail(ErrorCode::invalid_argument, "model: weight matrix shape mismatch");
  if (std::none_of(active.begin(), active.end(), [](bool a) { return a; })) {
    fail(ErrorCode::invalid_argument, "model: no active class");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(weights.begin(), weights.end(), finite) ||
      !std::all_of(bias.begin(), bias.end(), finite)) {
    fail(ErrorCode::numeric, "model: non-finite parameter");
  }
}

std::string Model::to_text() const {
  std::string out;
  out += std::string(kModelMagic) + " " + std::to_string(kModelVersion) + "\n";
  out += "kind " + std::string(model_kind_name(kind)) + "\n";
  out += "feature " + std::string(feature_kind_name(feature)) + "\n";
  out += "classes -1 0 1\n";
  out += "active";
  for (bool a : active) out += a ? " 1" : " 0";
  out += "\ndim " + std::to_string(dim) + "\nbias";
  for (double b : bias) out += " " + format_double(b);
  out += "\n";
  for (int c = 0; c < 3; ++c) {
    out += "w " + std::to_string(static_cast<int>(class_at(c)));
    for (std::size_t i = 0; i < dim; ++i) out += " " + format_double(weight(c, i));
    out += "\n";
  }
  return out;
}

Model Model::from_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& why) -> void {
    fail(ErrorCode::parse, origin + ": line " + std::to_string(line_no) + ": " + why);
  };
  auto next_fields = [&](std::string_view key) {
    if (!std::getline(in, line)) bad("unexpected end of file");
    ++line_no;
    auto f = infl::split(std::string(trim(line)), ' ');
    if (f.empty() || f[0] != key) bad("expected '" + std::string(key) + "'");
    f.erase(f.begin());
    return f;
  };
  auto number = [&](const std::string& s) {
    auto v = parse_double(s);
    if (!v || !std::isfinite(*v)) bad("bad number '" + s + "'");
    return *v;
  };

  Model m;
  auto magic = next_fields(kModelMagic);
  if (magic.size() != 1 || magic[0] != std::to_string(kModelVersion)) bad("unsupported model version");
  auto kind = next_fields("kind");
  auto k = kind.size() == 1 ? parse_model_kind(kind[0]) : std::nullopt;
  if (!k) bad("unknown model kind");
  m.kind = *k;
  auto feature = next_fields("feature");
  auto fk = feature.size() == 1 ? parse_feature_kind(feature[0]) : std::nullopt;
  if (!fk) bad("unknown feature kind");
  m.feature = *fk;
  if (next_fields("classes") != std::vector<std::string>{"-1", "0", "1"}) bad("class order must be -1 0 1");
  auto active = next_fields("active");
  if (active.size() != 3) bad("expected 3 active flags");
  for (int c = 0; c < 3; ++c) m.active[c] = active[c] == "1";
  auto dim = next_fields("dim");
  auto d = dim.size() == 1 ? parse_int(dim[0]) : std::nullopt;
  if (!d || *d < 1) bad("bad dim");
  m.dim = static_cast<std::size_t>(*d);
  auto bias = next_fields("bias");
  if (bias.size() != 3) bad("expected 3 biases");
  for (int c = 0; c < 3; ++c) m.bias[c] = number(bias[c]);
  m.weights.resize(3 * m.dim);
  for (int c = 0; c < 3; ++c) {
    auto row = next_fields("w");
    if (row.size() != m.dim + 1 || row[0] != std::to_string(static_cast<int>(class_at(c)))) {
      bad("bad weight row");
    }
    for (std::size_t i = 0; i < m.dim; ++i) m.weights[c * m.dim + i] = number(row[i + 1]);
  }
  m.validate();
  return m;
}

void Model::save(const std::string& path) const { write_file(path, to_text()); }

Model Model::load(const std::string& path) { return from_text(read_file(path), path); }

// ---- naive Bayes --------------------------------------------------------------

Model train_mnb(const Dataset& train, double alpha) {
  train.validate();
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_argument, "train_mnb: alpha must be > 0");
  if (train.size() == 0) fail(ErrorCode::invalid_argument, "train_mnb: empty training set");
  require_nonnegative(train, "train_mnb");

  const std::size_t dim = train.dim;
  std::vector<double> feat(3 * dim, 0.0);
  std::array<double, 3> total{};
  for (std::size_t r = 0; r < train.size(); ++r) {
    const int c = label_index(train.labels[r]);
    for (const auto& e : train.features[r].entries) feat[c * dim + e.index] += e.weight;
    total[c] += row_sum(train.features[r]);
  }
  const auto counts = train.class_counts();

  Model m;
  m.kind = ModelKind::mnb;
  m.dim = dim;
  m.active = present_classes(train);
  m.weights.assign(3 * dim, 0.0);
  for (int c = 0; c < 3; ++c) {
    if (!m.active[c]) continue;
    m.bias[c] = std::log(static_cast<double>(counts[c]) / static_cast<double>(train.size()));
    const double denom = total[c] + alpha * static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m.weights[c * dim + i] = std::log((feat[c * dim + i] + alpha) / denom);
    }
  }
  return m;
}

Model train_cnb(const Dataset& train, double alpha) {
  train.validate();
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_argument, "train_cnb: alpha must be > 0");
  if (train.size() == 0) fail(ErrorCode::invalid_argument, "train_cnb: empty training set");
  require_nonnegative(train, "train_cnb");

  const std::size_t dim = train.dim;
  std::vector<double> feat(3 * dim, 0.0);
  std::vector<double> all(dim, 0.0);
  std::array<double, 3> total{};
  double grand = 0.0;
  for (std::size_t r = 0; r < train.size(); ++r) {
    const int c = label_index(train.labels[r]);
    for (const auto& e : train.features[r].entries) {
      feat[c * dim + e.index] += e.weight;
      all[e.index] += e.weight;
    }
    const double s = row_sum(train.features[r]);
    total[c] += s;
    grand += s;
  }

  Model m;
  m.kind = ModelKind::cnb;
  m.dim = dim;
  m.active = present_classes(train);
  m.weights.assign(3 * dim, 0.0);
  const auto counts = train.class_counts();
  for (int c = 0; c < 3; ++c) {
    if (!m.active[c]) continue;
    if (counts[c] == train.size()) {
      fail(ErrorCode::invalid_argument,
           "train_cnb: class " + std::to_string(static_cast<int>(class_at(c))) +
               " covers the whole training set (empty complement)");
    }
    const double denom = alpha * static_cast<double>(dim) + (grand - total[c]);
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double w = std::log((alpha + all[i] - feat[c * dim + i]) / denom);
      m.weights[c * dim + i] = w;
      norm += std::fabs(w);
    }
    if (norm > 0.0) {
      for (std::size_t i = 0; i < dim; ++i) m.weights[c * dim + i] /= norm;
    }
  }
  return m;
}

// ---- logistic regression ---------------------------------------------------------

Objective logreg_objective(const Dataset& data, std::span<const double> params, double l2) {
  const std::size_t dim = data.dim;
  if (params.size() != 3 * dim + 3) fail(ErrorCode::invalid_argument, "logreg: parameter size mismatch");
  if (data.size() == 0) fail(ErrorCode::invalid_argument, "logreg: empty dataset");
  const double* w = params.data();
  const double* b = params.data() + 3 * dim;

  Objective obj;
  obj.grad.assign(params.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(data.size());
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto& x = data.features[r];
    std::array<double, 3> s{};
    for (int c = 0; c < 3; ++c) s[c] = b[c] + dot(x, w + c * dim);
    const double mx = *std::max_element(s.begin(), s.end());
    double z = 0.0;
    for (int c = 0; c < 3; ++c) z += std::exp(s[c] - mx);
    const double log_z = mx + std::log(z);
    const int y = label_index(data.labels[r]);
    obj.loss += (log_z - s[y]) * inv_n;
    for (int c = 0; c < 3; ++c) {
      const double resid = (std::exp(s[c] - log_z) - (c == y ? 1.0 : 0.0)) * inv_n;
      for (const auto& e : x.entries) obj.grad[c * dim + e.index] += resid * e.weight;
      obj.grad[3 * dim + c] += resid;
    }
  }
  double sq = 0.0;
  for (std::size_t j = 0; j < 3 * dim; ++j) {
    sq += w[j] * w[j];
    obj.grad[j] += l2 * w[j];
  }
  obj.loss += 0.5 * l2 * sq;
  return obj;
}

Model train_logreg(const Dataset& train, const LogRegOptions& opt, std::vector<double>* loss_trace) {
  train.validate();
  if (opt.iters < 1) fail(ErrorCode::invalid_argument, "train_logreg: iterations must be >= 1");
  if (!(opt.lr > 0.0)) fail(ErrorCode::invalid_argument, "train_logreg: learning rate must be > 0");
  if (!(opt.l2 >= 0.0)) fail(ErrorCode::invalid_argument, "train_logreg: l2 must be >= 0");
  if (train.size() == 0) fail(ErrorCode::invalid_argument, "train_logreg: empty training set");

  std::vector<double> params(3 * train.dim + 3, 0.0);
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opt.iters; ++it) {
    auto obj = logreg_objective(train, params, opt.l2);
    if (!std::isfinite(obj.loss)) fail(ErrorCode::numeric, "train_logreg: loss diverged (non-finite)");
    if (obj.loss > prev + 1e-12 * std::max(1.0, std::fabs(prev))) {
      fail(ErrorCode::numeric, "train_logreg: loss increased at iteration " + std::to_string(it) +
                                   "; use a smaller learning rate");
    }
    if (loss_trace) loss_trace->push_back(obj.loss);
    prev = obj.loss;
    for (std::size_t j = 0; j < params.size(); ++j) params[j] -= opt.lr * obj.grad[j];
  }

  Model m;
  m.kind = ModelKind::logreg;
  m.dim = train.dim;
  m.weights.assign(params.begin(), params.begin() + 3 * train.dim);
  for (int c = 0; c < 3; ++c) m.bias[c] = params[3 * train.dim + c];
  m.validate();
  return m;
}

// ---- linear SVM --------------------------------------------------------------------

Objective linsvm_objective(const Dataset& data, std::span<const double> params, double reg) {
  const std::size_t dim = data.dim;
  if (params.size() != 3 * dim + 3) fail(ErrorCode::invalid_argument, "linsvm: parameter size mismatch");
  if (data.size() == 0) fail(ErrorCode::invalid_argument, "linsvm: empty dataset");
  const double* w = params.data();
  const double* b = params.data() + 3 * dim;

  Objective obj;
  obj.grad.assign(params.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(data.size());
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto& x = data.features[r];
    const int y = label_index(data.labels[r]);
    for (int c = 0; c < 3; ++c) {
      const double sign = c == y ? 1.0 : -1.0;
      const double margin = sign * (b[c] + dot(x, w + c * dim));
      if (margin < 1.0) {
        obj.loss += (1.0 - margin) * inv_n;
        for (const auto& e : x.entries) obj.grad[c * dim + e.index] -= sign * e.weight * inv_n;
        obj.grad[3 * dim + c] -= sign * inv_n;
      }
    }
  }
  for (std::size_t j = 0; j < params.size(); ++j) {
    obj.loss += 0.5 * reg * params[j] * params[j];
    obj.grad[j] += reg * params[j];
  }
  return obj;
}

Model train_linsvm(const Dataset& train, const SvmOptions& opt) {
  train.validate();
  if (!(opt.reg > 0.0)) fail(ErrorCode::invalid_argument, "train_linsvm: reg must be > 0");
  if (opt.epochs < 1) fail(ErrorCode::invalid_argument, "train_linsvm: epochs must be >= 1");
  Model m;
  m.kind = ModelKind::linsvm;
  m.dim = train.dim;
  m.active = present_classes(train);
  if (std::count(m.active.begin(), m.active.end(), true) < 2) {
    fail(ErrorCode::invalid_argument, "train_linsvm: need at least two classes");
  }
  m.weights.assign(3 * train.dim, 0.0);

  const std::size_t n = train.size();
  const std::size_t dim = train.dim;
  for (int c = 0; c < 3; ++c) {
    if (!m.active[c]) continue;
    // w = scale * v; v[dim] is the bias coordinate
    std::vector<double> v(dim + 1, 0.0);
    double scale = 1.0;
    Rng rng(opt.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t t = 0;
    for (int epoch = 0; epoch < opt.epochs; ++epoch) {
      rng.shuffle(order);
      for (std::size_t r : order) {
        ++t;
        const auto& x = train.features[r];
        const double y = label_index(train.labels[r]) == c ? 1.0 : -1.0;
        const double eta = 1.0 / (opt.reg * static_cast<double>(t));
        const double margin = y * scale * (dot(x, v.data()) + v[dim]);
        if (t == 1) {
          std::fill(v.begin(), v.end(), 0.0);
          scale = 1.0;
        } else {
          scale *= 1.0 - 1.0 / static_cast<double>(t);
        }
        if (margin < 1.0) {
          const double step = eta * y / scale;
          for (const auto& e : x.entries) v[e.index] += step * e.weight;
          v[dim] += step;
        }
      }
    }
    for (std::size_t i = 0; i < dim; ++i) m.weights[c * dim + i] = scale * v[i];
    m.bias[c] = scale * v[dim];
  }
  m.validate();
  return m;
}

// ---- evaluation -------------------------------------------------------------------------

EvalReport evaluate_predictions(std::span<const Sentiment> truth, std::span<const Sentiment> predicted) {
  if (truth.size() != predicted.size()) fail(ErrorCode::invalid_argument, "evaluate: length mismatch");
  if (truth.empty()) fail(ErrorCode::invalid_argument, "evaluate: empty split");
  EvalReport rep;
  rep.n = truth.size();
  std::size_t correct = 0, not_pos = 0, false_pos = 0, not_neg = 0, false_neg = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = label_index(truth[i]);
    const int p = label_index(predicted[i]);
    ++rep.confusion[t][p];
    if (t == p) ++correct;
    if (truth[i] != Sentiment::positive) {
      ++not_pos;
      if (predicted[i] == Sentiment::positive) ++false_pos;
    }
    if (truth[i] != Sentiment::negative) {
      ++not_neg;
      if (predicted[i] == Sentiment::negative) ++false_neg;
    }
  }
  auto pct = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : 100.0 * static_cast<double>(a) / static_cast<double>(b);
  };
  rep.accuracy = pct(correct, rep.n);
  rep.fp_rate = pct(false_pos, not_pos);
  rep.fn_rate = pct(false_neg, not_neg);
  return rep;
}

EvalReport evaluate(const Model& model, const Dataset& data) {
  data.validate();
  if (data.dim != model.dim) fail(ErrorCode::invalid_argument, "evaluate: feature dimension mismatch");
  std::vector<Sentiment> pred;
  pred.reserve(data.size());
  for (const auto& x : data.features) pred.push_back(model.predict(x));
  return evaluate_predictions(data.labels, pred);
}

// ---- gradient check ---------------------------------------------------------------------

double gradient_check(ModelKind kind, const Dataset& toy, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::invalid_argument, "gradient_check: eps must be > 0");
  if (kind != ModelKind::logreg && kind != ModelKind::linsvm) {
    fail(ErrorCode::invalid_argument, "gradient_check: model kind has no gradient-trained objective");
  }
  toy.validate();
  constexpr double kL2 = 1e-2;
  auto objective = [&](std::span<const double> p) {
    return kind == ModelKind::logreg ? logreg_objective(toy, p, kL2) : linsvm_objective(toy, p, kL2);
  };
  std::vector<double> point(3 * toy.dim + 3);
  for (std::size_t j = 0; j < point.size(); ++j) point[j] = 0.3 * std::sin(1.0 + 1.7 * static_cast<double>(j));

  const auto analytic = objective(point).grad;
  double worst = 0.0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    auto plus = point, minus = point;
    plus[j] += eps;
    minus[j] -= eps;
    const double numeric = (objective(plus).loss - objective(minus).loss) / (2.0 * eps);
    const double denom = std::max({std::fabs(analytic[j]), std::fabs(numeric), 1e-8});
    worst = std::max(worst, std::fabs(analytic[j] - numeric) / denom);
  }
  return worst;
}

// ---- scoring ------------------------------------------------------------------------------

ExternalScores ingest_external_scores(const std::string& path,
                                      const std::unordered_set<std::string>* known_ids) {
  ExternalScores out;
  std::unordered_set<std::string> seen;
  for (const auto& row : csv::read_with_header(path, {"tweet_id", "score"})) {
    const std::string where = path + ": line " + std::to_string(row.line) + ": ";
    const std::string id(trim(row.fields[0]));
    if (id.empty()) fail(ErrorCode::parse, where + "empty tweet_id");
    auto score = parse_sentiment(row.fields[1]);
    if (!score) fail(ErrorCode::parse, where + "score '" + row.fields[1] + "' not in {-1,0,1}");
    if (!seen.insert(id).second) fail(ErrorCode::parse, where + "duplicate tweet_id '" + id + "'");
    if (known_ids && !known_ids->count(id)) {
      ++out.unknown_ids;
      out.warnings.push_back("score for unknown tweet id '" + id + "'");
    }
    out.scores.push_back({id, *score});
  }
  return out;
}

std::vector<ScoredTweet> score_tweets(const Model& model,
                                      const std::vector<std::pair<std::string, SparseVec>>& docs) {
  std::vector<ScoredTweet> out;
  out.reserve(docs.size());
  for (const auto& [id, x] : docs) out.push_back({id, model.predict(x)});
  return out;
}

std::string scores_to_csv(const std::vector<ScoredTweet>& scores) {
  std::string out = "tweet_id,score\n";
  for (const auto& s : scores) {
    out += csv::quote(s.tweet_id) + "," + std::to_string(static_cast<int>(s.score)) + "\n";
  }
  return out;
}

}  // namespace infl::classify
