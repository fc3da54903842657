#ifndef INFLSENT_H
#define INFLSENT_H

/* C interface to the inflation-sentiment library.
 *
 * Every fallible call returns an infl_status; on failure a message is
 * available from infl_last_error() on the same thread until the next call.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function (passing NULL is allowed). */

#include <stddef.h>
#include <stdint.h>

#if defined(INFLSENT_BUILDING_LIBRARY)
#define INFL_API __attribute__((visibility("default")))
#else
#define INFL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infl_status {
  INFL_OK = 0,
  INFL_ERR_INVALID_ARGUMENT = 1,
  INFL_ERR_IO = 2,
  INFL_ERR_PARSE = 3,
  INFL_ERR_NUMERIC = 4,
  INFL_ERR_STATE = 5,
  INFL_ERR_INTERNAL = 99
} infl_status;

INFL_API const char* infl_version(void);
INFL_API const char* infl_last_error(void);

/* Receives warnings (skipped regions, ignored scores, short periods). */
typedef void (*infl_log_fn)(const char* message, void* user);
INFL_API void infl_set_log_callback(infl_log_fn fn, void* user);

/* Strings returned through char** are released with infl_string_free. */
INFL_API void infl_string_free(char* s);

/* ---- text ---------------------------------------------------------------- */

/* English Snowball stem of a lowercase word. Writes a NUL-terminated string
 * when it fits in cap bytes; *needed (optional) receives the required size. */
INFL_API infl_status infl_stem(const char* word, char* buf, size_t cap, size_t* needed);

typedef struct infl_prep infl_prep;
typedef struct infl_tokens infl_tokens;

/* stopwords_path may be NULL for the built-in list. */
INFL_API infl_status infl_prep_create(const char* stopwords_path, int stem, infl_prep** out);
INFL_API void infl_prep_free(infl_prep* prep);
INFL_API infl_status infl_prep_run(const infl_prep* prep, const char* text, infl_tokens** out);
INFL_API size_t infl_tokens_count(const infl_tokens* tokens);
INFL_API const char* infl_tokens_at(const infl_tokens* tokens, size_t i);
INFL_API void infl_tokens_free(infl_tokens* tokens);

/* ---- classifier ------------------------------------------------------------ */

typedef struct infl_model infl_model;

INFL_API infl_status infl_model_load(const char* path, infl_model** out);
INFL_API size_t infl_model_dim(const infl_model* model);
/* Sparse input with strictly increasing indices; *label in {-1, 0, 1}. */
INFL_API infl_status infl_model_predict(const infl_model* model, const uint32_t* indices,
                                        const double* values, size_t nnz, int* label);
INFL_API void infl_model_free(infl_model* model);

/* ---- time series and regression -------------------------------------------- */

/* out receives max_lag + 1 values. */
INFL_API infl_status infl_acf(const double* y, size_t n, size_t max_lag, double* out);
INFL_API infl_status infl_pacf(const double* y, size_t n, size_t max_lag, double* out);
INFL_API infl_status infl_select_lag(const double* y, size_t n, size_t max_p, size_t* out);

typedef struct infl_regression infl_regression;

typedef struct infl_coef {
  const char* name; /* owned by the regression handle */
  double estimate;
  double std_error;
  double t_stat;
  double p_value;
} infl_coef;

/* x is row-major rows x cols; names holds cols column names. */
INFL_API infl_status infl_ols(const double* x, size_t rows, size_t cols, const char* const* names,
                              const double* y, infl_regression** out);
INFL_API infl_status infl_fit_ar_trend(const double* y, size_t n, size_t p, int include_trend,
                                       infl_regression** out);
INFL_API size_t infl_regression_n_coef(const infl_regression* r);
INFL_API infl_status infl_regression_coef(const infl_regression* r, size_t i, infl_coef* out);
INFL_API double infl_regression_mse(const infl_regression* r);
INFL_API size_t infl_regression_n_obs(const infl_regression* r);
INFL_API size_t infl_regression_dof(const infl_regression* r);
INFL_API void infl_regression_free(infl_regression* r);

/* ---- pipeline commands ------------------------------------------------------- */

typedef struct infl_run_options {
  const char* config_path;
  const char* out_dir; /* NULL: "out" */
  int has_seed;
  uint64_t seed;
  const char* region;  /* NULL or US, GB, EU, CA, ASIA, ALL */
  const char* feature; /* NULL or lex, tfidf */
  const char* model;   /* NULL or mnb, cnb, logreg, linsvm */
  const char* scores;  /* NULL or model, external */
} infl_run_options;

INFL_API void infl_run_options_init(infl_run_options* opt);

typedef struct infl_eval_row {
  double train_accuracy; /* percent */
  double valid_accuracy;
  double fp_rate;
  double fn_rate;
} infl_eval_row;

typedef enum infl_regress_kind { INFL_REGRESS_TREND = 0, INFL_REGRESS_EQ1 = 1 } infl_regress_kind;

/* text (optional) receives the human-readable table of the command. */
INFL_API infl_status infl_run_prep(const infl_run_options* opt, size_t* n_tweets);
INFL_API infl_status infl_run_train(const infl_run_options* opt, infl_eval_row* row, char** text);
INFL_API infl_status infl_run_eval(const infl_run_options* opt, infl_eval_row* row, char** text);
INFL_API infl_status infl_run_score(const infl_run_options* opt, size_t* n_scored);
INFL_API infl_status infl_run_index(const infl_run_options* opt, size_t* n_regions, char** text);
INFL_API infl_status infl_run_regress(const infl_run_options* opt, infl_regress_kind which, char** text);
/* Returns INFL_ERR_STATE when a stage failed; the manifest records which. */
INFL_API infl_status infl_run_report(const infl_run_options* opt, char** text);

#ifdef __cplusplus
}
#endif

#endif
