#include "inflsent/inflsent.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <string>

#include "classify.hpp"
#include "error.hpp"
#include "pipeline.hpp"
#include "textprep.hpp"
#include "timeseries.hpp"

struct infl_prep {
  infl::textprep::PrepConfig cfg;
};

struct infl_tokens {
  std::vector<std::string> items;
};

struct infl_model {
  infl::classify::Model model;
};

struct infl_regression {
  infl::econo::RegressionResult result;
};

namespace {

thread_local std::string g_last_error;

std::mutex g_log_mutex;
infl_log_fn g_log_fn = nullptr;
void* g_log_user = nullptr;

infl_status to_status(infl::ErrorCode code) {
  switch (code) {
    case infl::ErrorCode::invalid_argument: return INFL_ERR_INVALID_ARGUMENT;
    case infl::ErrorCode::io: return INFL_ERR_IO;
    case infl::ErrorCode::parse: return INFL_ERR_PARSE;
    case infl::ErrorCode::numeric: return INFL_ERR_NUMERIC;
    case infl::ErrorCode::state: return INFL_ERR_STATE;
  }
  return INFL_ERR_INTERNAL;
}

template <typename F>
infl_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return INFL_OK;
  } catch (const infl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return INFL_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) infl::fail(infl::ErrorCode::invalid_argument, what);
}

void log_warning(const std::string& msg) {
  std::lock_guard lock(g_log_mutex);
  if (g_log_fn) g_log_fn(msg.c_str(), g_log_user);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

infl::pipeline::Context context(const infl_run_options* opt) {
  require(opt && opt->config_path, "options with a config_path are required");
  infl::pipeline::Options o;
  o.config_path = opt->config_path;
  if (opt->out_dir) o.out_dir = opt->out_dir;
  if (opt->has_seed) o.seed = opt->seed;
  if (opt->region) o.region = opt->region;
  if (opt->feature) o.feature = opt->feature;
  if (opt->model) o.model = opt->model;
  if (opt->scores) o.scores = opt->scores;
  return infl::pipeline::make_context(o, log_warning);
}

void fill_row(infl_eval_row* row, const infl::classify::EvalReport& train,
              const infl::classify::EvalReport& valid) {
  if (!row) return;
  row->train_accuracy = train.accuracy;
  row->valid_accuracy = valid.accuracy;
  row->fp_rate = valid.fp_rate;
  row->fn_rate = valid.fn_rate;
}

}  // namespace

extern "C" {

const char* infl_version(void) { return INFLSENT_VERSION; }

const char* infl_last_error(void) { return g_last_error.c_str(); }

void infl_set_log_callback(infl_log_fn fn, void* user) {
  std::lock_guard lock(g_log_mutex);
  g_log_fn = fn;
  g_log_user = user;
}

void infl_string_free(char* s) { std::free(s); }

infl_status infl_stem(const char* word, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(word != nullptr, "word is NULL");
    const std::string s = infl::textprep::stem(word);
    if (needed) *needed = s.size() + 1;
    if (s.size() + 1 > cap || !buf) {
      infl::fail(infl::ErrorCode::invalid_argument, "buffer too small");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

infl_status infl_prep_create(const char* stopwords_path, int stem, infl_prep** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    auto p = std::make_unique<infl_prep>();
    if (stopwords_path) p->cfg.stopwords = infl::textprep::load_stopwords(stopwords_path);
    p->cfg.stem = stem != 0;
    p->cfg.validate();
    *out = p.release();
  });
}

void infl_prep_free(infl_prep* prep) { delete prep; }

infl_status infl_prep_run(const infl_prep* prep, const char* text, infl_tokens** out) {
  return guarded([&] {
    require(prep && text && out, "NULL argument");
    auto t = std::make_unique<infl_tokens>();
    t->items = infl::textprep::tokenize_and_clean(text, prep->cfg).tokens;
    *out = t.release();
  });
}

size_t infl_tokens_count(const infl_tokens* tokens) { return tokens ? tokens->items.size() : 0; }

const char* infl_tokens_at(const infl_tokens* tokens, size_t i) {
  if (!tokens || i >= tokens->items.size()) return nullptr;
  return tokens->items[i].c_str();
}

void infl_tokens_free(infl_tokens* tokens) { delete tokens; }

infl_status infl_model_load(const char* path, infl_model** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    auto m = std::make_unique<infl_model>();
    m->model = infl::classify::Model::load(path);
    *out = m.release();
  });
}

size_t infl_model_dim(const infl_model* model) { return model ? model->model.dim : 0; }

infl_status infl_model_predict(const infl_model* model, const uint32_t* indices, const double* values,
                               size_t nnz, int* label) {
  return guarded([&] {
    require(model && label && (nnz == 0 || (indices && values)), "NULL argument");
    infl::vectorize::SparseVec x;
    for (size_t i = 0; i < nnz; ++i) {
      require(indices[i] < model->model.dim, "feature index out of range");
      require(i == 0 || indices[i] > indices[i - 1], "indices must be strictly increasing");
      x.entries.push_back({indices[i], values[i]});
    }
    *label = static_cast<int>(model->model.predict(x));
  });
}

void infl_model_free(infl_model* model) { delete model; }

infl_status infl_acf(const double* y, size_t n, size_t max_lag, double* out) {
  return guarded([&] {
    require(y && out, "NULL argument");
    const auto r = infl::econo::acf({y, n}, max_lag);
    std::copy(r.begin(), r.end(), out);
  });
}

infl_status infl_pacf(const double* y, size_t n, size_t max_lag, double* out) {
  return guarded([&] {
    require(y && out, "NULL argument");
    const auto r = infl::econo::pacf({y, n}, max_lag);
    std::copy(r.begin(), r.end(), out);
  });
}

infl_status infl_select_lag(const double* y, size_t n, size_t max_p, size_t* out) {
  return guarded([&] {
    require(y && out, "NULL argument");
    *out = infl::econo::select_lag({y, n}, max_p);
  });
}

infl_status infl_ols(const double* x, size_t rows, size_t cols, const char* const* names,
                     const double* y, infl_regression** out) {
  return guarded([&] {
    require(x && names && y && out, "NULL argument");
    infl::econo::Design d;
    for (size_t c = 0; c < cols; ++c) {
      require(names[c] != nullptr, "column name is NULL");
      d.columns.emplace_back(names[c]);
    }
    d.x.assign(x, x + rows * cols);
    d.y.assign(y, y + rows);
    auto r = std::make_unique<infl_regression>();
    r->result = infl::econo::ols(d);
    *out = r.release();
  });
}

infl_status infl_fit_ar_trend(const double* y, size_t n, size_t p, int include_trend,
                              infl_regression** out) {
  return guarded([&] {
    require(y && out, "NULL argument");
    auto r = std::make_unique<infl_regression>();
    r->result = infl::econo::fit_ar_trend({y, n}, {p, include_trend != 0});
    *out = r.release();
  });
}

size_t infl_regression_n_coef(const infl_regression* r) { return r ? r->result.coef.size() : 0; }

infl_status infl_regression_coef(const infl_regression* r, size_t i, infl_coef* out) {
  return guarded([&] {
    require(r && out, "NULL argument");
    require(i < r->result.coef.size(), "coefficient index out of range");
    const auto& c = r->result.coef[i];
    *out = {c.name.c_str(), c.estimate, c.std_error, c.t_stat, c.p_value};
  });
}

double infl_regression_mse(const infl_regression* r) { return r ? r->result.mse : 0.0; }
size_t infl_regression_n_obs(const infl_regression* r) { return r ? r->result.n_obs : 0; }
size_t infl_regression_dof(const infl_regression* r) { return r ? r->result.dof : 0; }
void infl_regression_free(infl_regression* r) { delete r; }

void infl_run_options_init(infl_run_options* opt) {
  if (opt) *opt = infl_run_options{nullptr, nullptr, 0, 0, nullptr, nullptr, nullptr, nullptr};
}

infl_status infl_run_prep(const infl_run_options* opt, size_t* n_tweets) {
  return guarded([&] {
    const auto r = infl::pipeline::cmd_prep(context(opt));
    if (n_tweets) *n_tweets = r.n_tweets;
  });
}

infl_status infl_run_train(const infl_run_options* opt, infl_eval_row* row, char** text) {
  return guarded([&] {
    const auto r = infl::pipeline::cmd_train(context(opt));
    fill_row(row, r.train, r.valid);
    if (text) *text = dup_string(r.row);
  });
}

infl_status infl_run_eval(const infl_run_options* opt, infl_eval_row* row, char** text) {
  return guarded([&] {
    const auto r = infl::pipeline::cmd_eval(context(opt));
    fill_row(row, r.train, r.valid);
    if (text) *text = dup_string(r.text);
  });
}

infl_status infl_run_score(const infl_run_options* opt, size_t* n_scored) {
  return guarded([&] {
    const auto n = infl::pipeline::cmd_score(context(opt));
    if (n_scored) *n_scored = n;
  });
}

infl_status infl_run_index(const infl_run_options* opt, size_t* n_regions, char** text) {
  return guarded([&] {
    const auto r = infl::pipeline::cmd_index(context(opt));
    if (n_regions) *n_regions = r.regions.size();
    if (text) *text = dup_string(r.table);
  });
}

infl_status infl_run_regress(const infl_run_options* opt, infl_regress_kind which, char** text) {
  return guarded([&] {
    require(which == INFL_REGRESS_TREND || which == INFL_REGRESS_EQ1, "unknown regression kind");
    const auto t = infl::pipeline::cmd_regress(
        context(opt), which == INFL_REGRESS_TREND ? infl::pipeline::Which::trend : infl::pipeline::Which::eq1);
    if (text) *text = dup_string(t);
  });
}

infl_status infl_run_report(const infl_run_options* opt, char** text) {
  return guarded([&] {
    const auto r = infl::pipeline::cmd_report(context(opt));
    std::string summary;
    for (const auto& s : r.stages) {
      summary += s.name + "\t" + s.status + (s.error.empty() ? "" : "\t" + s.error) + "\n";
    }
    if (text) *text = dup_string(summary);
    if (!r.ok) infl::fail(infl::ErrorCode::state, "report: a stage failed (see manifest.json)");
  });
}

}  // extern "C"
