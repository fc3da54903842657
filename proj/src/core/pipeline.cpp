#include "pipeline.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "corpus.hpp"
#include "csv.hpp"
#include "eq1.hpp"
#include "error.hpp"
#include "lexicon.hpp"
#include "report.hpp"
#include "svg.hpp"
#include "textprep.hpp"
#include "timeseries.hpp"
#include "util.hpp"
#include "vectorize.hpp"

namespace infl::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::state, "sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Context make_context(const Options& opt, Logger warn) {
  if (opt.config_path.empty()) fail(ErrorCode::invalid_argument, "no config file given");
  auto raw = config::RawConfig::load(opt.config_path);
  if (opt.seed) raw.set("seed", std::to_string(*opt.seed));
  if (opt.region) {
    auto r = parse_region_code(*opt.region);
    if (!r || *r == Region::OTHER || *r == Region::UNKNOWN) {
      fail(ErrorCode::invalid_argument, "unknown region '" + *opt.region + "'");
    }
    raw.set("index.regions", std::string(region_name(*r)));
  }
  if (opt.feature) raw.set("model.feature", *opt.feature);
  if (opt.model) raw.set("model.kind", *opt.model);
  if (opt.scores) raw.set("index.scores", *opt.scores);
  Context ctx{config::build(raw), fs::path(opt.out_dir), warn ? std::move(warn) : [](const std::string&) {}};
  std::error_code ec;
  fs::create_directories(ctx.out_dir, ec);
  if (ec || !fs::is_directory(ctx.out_dir)) {
    fail(ErrorCode::io, "cannot create output directory '" + ctx.out_dir.string() + "'");
  }
  return ctx;
}

namespace {

void write(const fs::path& p, std::string_view content) { write_file(p.string(), content); }

std::string join_words(const std::vector<std::string>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ' ';
    out += ws[i];
  }
  return out;
}

textprep::PrepConfig prep_config(const config::PipelineConfig& cfg) {
  textprep::PrepConfig p;
  if (cfg.has_path("stopwords")) p.stopwords = textprep::load_stopwords(cfg.resolve("stopwords").string());
  if (cfg.has_path("emoji_ranges")) p.emoji = textprep::load_emoji_ranges(cfg.resolve("emoji_ranges").string());
  p.remove_stopwords = cfg.remove_stopwords;
  p.stem = cfg.stem;
  p.drop_user_token = cfg.drop_user_token;
  p.validate();
  return p;
}

std::vector<corpus::Tweet> filtered_tweets(const config::PipelineConfig& cfg) {
  const auto regions = cfg.has_path("regions") ? corpus::load_region_map(cfg.resolve("regions").string())
                                               : corpus::default_region_map();
  const auto tweets = corpus::load_tweets(cfg.resolve("tweets").string(), cfg.window(), regions);
  const auto dict = cfg.has_path("keywords")
                        ? corpus::load_keyword_config(cfg.resolve("keywords").string()).dictionary
                        : corpus::default_dictionary();
  return corpus::keyword_filter(tweets, dict);
}

std::string vocab_path(const fs::path& model_path) { return model_path.string() + ".vocab.csv"; }

struct Featurizer {
  classify::FeatureKind kind;
  textprep::PrepConfig prep;
  lexicon::ValenceLexicon lex;
  vectorize::Vocabulary vocab;

  [[nodiscard]] vectorize::SparseVec operator()(const textprep::PreparedDoc& d) const {
    if (kind == classify::FeatureKind::lex) return classify::lex_to_sparse(lexicon::lex_score(d.words, lex));
    return vectorize::transform(d.stems, vocab);
  }
  [[nodiscard]] std::size_t dim() const {
    return kind == classify::FeatureKind::lex ? classify::kLexDim : vocab.size();
  }
};

Featurizer base_featurizer(const config::PipelineConfig& cfg, classify::FeatureKind kind) {
  Featurizer f{kind, prep_config(cfg), {}, {}};
  if (kind == classify::FeatureKind::lex) {
    if (!cfg.has_path("lexicon")) fail(ErrorCode::invalid_argument, "lex features need paths.lexicon");
    f.lex = lexicon::load_lexicon(cfg.resolve("lexicon").string());
  }
  return f;
}

struct Labeled {
  std::vector<textprep::PreparedDoc> docs;
  classify::Dataset data;  // tagged, features empty until featurize()
};

Labeled labeled_split(const Context& ctx, const textprep::PrepConfig& prep) {
  const auto labels = corpus::load_labels(ctx.cfg.resolve("labels").string());
  if (labels.empty()) fail(ErrorCode::invalid_argument, "labels file has no rows");
  Labeled out;
  classify::Dataset blank;
  for (const auto& l : labels) {
    out.docs.push_back(textprep::prepare(l.text, prep));
    blank.labels.push_back(l.label);
    blank.features.emplace_back();
  }
  const double fr[2] = {ctx.cfg.train_fraction, 1.0 - ctx.cfg.train_fraction};
  out.data = classify::split(blank, fr, ctx.cfg.seed);
  return out;
}

void featurize(Labeled& l, const Featurizer& f) {
  l.data.dim = f.dim();
  for (std::size_t i = 0; i < l.docs.size(); ++i) l.data.features[i] = f(l.docs[i]);
}

classify::Model train_model(const config::PipelineConfig& cfg, const classify::Dataset& train) {
  switch (cfg.model) {
    case classify::ModelKind::mnb: return classify::train_mnb(train, cfg.alpha);
    case classify::ModelKind::cnb: return classify::train_cnb(train, cfg.alpha);
    case classify::ModelKind::logreg: return classify::train_logreg(train, cfg.logreg);
    case classify::ModelKind::linsvm:
      return classify::train_linsvm(train, {cfg.svm_reg, cfg.svm_epochs, cfg.seed});
  }
  fail(ErrorCode::invalid_argument, "unknown model kind");
}

struct LoadedModel {
  classify::Model model;
  Featurizer featurizer;
};

LoadedModel load_model(const Context& ctx) {
  const auto path = ctx.model_path();
  if (!fs::exists(path)) {
    fail(ErrorCode::io, "model file '" + path.string() + "' not found; run train first");
  }
  auto model = classify::Model::load(path.string());
  auto f = base_featurizer(ctx.cfg, model.feature);
  if (model.feature == classify::FeatureKind::tfidf) f.vocab = vectorize::Vocabulary::load_csv(vocab_path(path));
  if (f.dim() != model.dim) fail(ErrorCode::parse, "model dimension does not match its feature space");
  return {std::move(model), std::move(f)};
}

std::vector<classify::ScoredTweet> model_scores(const Context& ctx,
                                                const std::vector<corpus::Tweet>& tweets) {
  const auto lm = load_model(ctx);
  std::vector<std::pair<std::string, vectorize::SparseVec>> docs;
  docs.reserve(tweets.size());
  for (const auto& t : tweets) docs.emplace_back(t.id, lm.featurizer(textprep::prepare(t.text, lm.featurizer.prep, t.id)));
  return classify::score_tweets(lm.model, docs);
}

std::vector<classify::ScoredTweet> tweet_scores(const Context& ctx,
                                                const std::vector<corpus::Tweet>& tweets) {
  if (ctx.cfg.score_source == config::ScoreSource::model) return model_scores(ctx, tweets);
  std::unordered_set<std::string> known;
  for (const auto& t : tweets) known.insert(t.id);
  auto ext = classify::ingest_external_scores(ctx.cfg.resolve("external_scores").string(), &known);
  if (ext.unknown_ids > 0) {
    ctx.warn(std::to_string(ext.unknown_ids) +
             " external scores refer to tweets outside the filtered corpus; ignored");
  }
  std::vector<classify::ScoredTweet> out;
  for (auto& s : ext.scores) {
    if (known.count(s.tweet_id)) out.push_back(std::move(s));
  }
  return out;
}

IndexResult build_index(const Context& ctx) {
  const auto tweets = filtered_tweets(ctx.cfg);
  const auto scores = tweet_scores(ctx, tweets);
  IndexResult res;
  std::vector<sentiment::IndexSummary> summaries;
  for (Region r : ctx.cfg.index_regions) {
    auto pts = sentiment::build_daily_index(scores, tweets, r, ctx.cfg.min_n);
    if (pts.empty()) {
      ctx.warn("region " + std::string(region_name(r)) + " has no scored tweets; omitted");
      continue;
    }
    auto vols = sentiment::rolling_vol(pts);
    summaries.push_back(sentiment::summarize_index(r, pts, vols));
    res.regions.push_back({r, std::move(pts), std::move(vols)});
  }
  if (res.regions.empty()) fail(ErrorCode::invalid_argument, "no scored tweets in any requested region");
  res.table = sentiment::render_index_table(summaries);
  return res;
}

// Concatenates CSV documents that share a header line.
std::string concat_csv(const std::vector<std::string>& docs, const std::string& header) {
  std::string out = header;
  for (const auto& d : docs) out += d.substr(d.find('\n') + 1);
  return out;
}

std::string trend_regress(const Context& ctx, const IndexResult& idx) {
  std::vector<econo::PeriodFit> fits;
  json regions = json::array();
  for (const auto& ri : idx.regions) {
    const auto seg = sentiment::segment(ri.points, ctx.cfg.periods);
    json periods = json::array();
    for (std::size_t i = 0; i < ctx.cfg.periods.size(); ++i) {
      econo::PeriodFit f{ri.region, ctx.cfg.periods[i].name, 0, std::nullopt, {}};
      std::vector<double> series;
      for (const auto& p : seg.parts[i]) series.push_back(p.mean_score);
      try {
        if (ctx.cfg.ar_p) {
          f.p = *ctx.cfg.ar_p;
        } else {
          const std::size_t cap = series.size() >= 3 ? series.size() - 2 : 0;
          f.p = econo::select_lag(series, std::min(ctx.cfg.ar_max_p, cap));
        }
        f.fit = econo::fit_ar_trend(series, {f.p, true});
      } catch (const Error& e) {
        f.note = e.what();
        ctx.warn(std::string(region_name(ri.region)) + " " +
                 std::string(sentiment::period_name(f.period)) + ": " + f.note);
      }
      json pj{{"period", sentiment::period_name(f.period)}, {"n_days", series.size()}, {"p", f.p}};
      pj["fit"] = f.fit ? report::to_json(*f.fit) : json(nullptr);
      if (!f.fit) pj["note"] = f.note;
      periods.push_back(pj);
      fits.push_back(std::move(f));
    }
    regions.push_back({{"region", region_name(ri.region)}, {"dropped", seg.dropped}, {"periods", periods}});
  }
  const auto grid = econo::period_mse(fits);
  const std::string table = report::render_trend_table(fits);
  const std::string mse = econo::render_mse_table(grid);
  write(ctx.out("trend.json"), json{{"model", "ar_trend"}, {"regions", regions}}.dump(2) + "\n");
  write(ctx.out("trend.txt"), table);
  write(ctx.out("mse.txt"), mse);
  return table + "\n" + mse;
}

std::string eq1_regress(const Context& ctx, const IndexResult& idx) {
  std::vector<const RegionIndex*> targets;
  for (const auto& ri : idx.regions) {
    if (ri.region == Region::US || ri.region == Region::GB) targets.push_back(&ri);
  }
  if (targets.empty()) fail(ErrorCode::invalid_argument, "eq1 needs a US or GB sentiment index");
  const auto trends = corpus::load_trends(ctx.cfg.resolve("trends").string());

  std::string text;
  json regions = json::array();
  for (const auto* ri : targets) {
    const std::string name(region_name(ri->region));
    const auto ys = corpus::load_yields(
        ctx.cfg.resolve(ri->region == Region::US ? "yields_us" : "yields_gb").string(), ri->region);
    const auto in = econo::make_eq1_inputs(corpus::breakeven(ys), trends, ri->region,
                                           sentiment::weekly_mean(ri->points));
    std::vector<report::Eq1Column> cols;
    json jcols = json::array();
    auto run = [&](const std::string& label, const DateRange& range, bool required) {
      report::Eq1Column c{label, std::nullopt, {}};
      try {
        c.pair = econo::run_eq1(in, range);
      } catch (const Error& e) {
        if (required) fail(e.code(), name + " " + label + ": " + e.what());
        c.note = e.what();
        ctx.warn(name + " " + label + ": " + c.note);
      }
      json jc{{"label", label}};
      if (c.pair) {
        jc["ar"] = report::to_json(c.pair->ar);
        jc["exog"] = report::to_json(c.pair->exog);
        jc["dropped"] = c.pair->dropped;
      } else {
        jc["note"] = c.note;
      }
      jcols.push_back(jc);
      cols.push_back(std::move(c));
    };
    run("Total", ctx.cfg.window(), true);
    for (const auto& p : ctx.cfg.periods) run(std::string(sentiment::period_name(p.name)), p.range, false);
    text += report::render_eq1_table(name + " Infl", cols) + "\n";
    regions.push_back({{"region", name}, {"columns", jcols}});
  }
  write(ctx.out("eq1.json"), json{{"model", "eq1"}, {"regions", regions}}.dump(2) + "\n");
  write(ctx.out("eq1.txt"), text);
  return text;
}

}  // namespace

PrepResult cmd_prep(const Context& ctx) {
  const auto prep = prep_config(ctx.cfg);
  const auto tweets = filtered_tweets(ctx.cfg);
  std::string out = "tweet_id,created_at,region,words,stems\n";
  for (const auto& t : tweets) {
    const auto d = textprep::prepare(t.text, prep, t.id);
    out += csv::join({t.id, format_timestamp(t.created_at), std::string(region_name(t.region)),
                      join_words(d.words), join_words(d.stems)}) +
           "\n";
  }
  write(ctx.out("tokens.csv"), out);
  return {tweets.size()};
}

TrainResult cmd_train(const Context& ctx) {
  auto f = base_featurizer(ctx.cfg, ctx.cfg.feature);
  auto l = labeled_split(ctx, f.prep);
  if (f.kind == classify::FeatureKind::tfidf) {
    std::vector<std::vector<std::string>> train_docs;
    for (std::size_t i = 0; i < l.docs.size(); ++i) {
      if (l.data.tags[i] == classify::Split::train) train_docs.push_back(l.docs[i].stems);
    }
    f.vocab = vectorize::fit_vocab(train_docs, ctx.cfg.min_df);
  }
  featurize(l, f);
  const auto train = l.data.subset(classify::Split::train);
  const auto valid = l.data.subset(classify::Split::valid);
  auto model = train_model(ctx.cfg, train);
  model.feature = f.kind;
  model.save(ctx.model_path().string());
  if (f.kind == classify::FeatureKind::tfidf) f.vocab.save_csv(vocab_path(ctx.model_path()));

  TrainResult r{classify::evaluate(model, train), classify::evaluate(model, valid), {}};
  r.row = report::table4_header() + report::table4_row(f.kind, model.kind, r.train, r.valid);
  write(ctx.out("train_report.tsv"), r.row);
  return r;
}

EvalResult cmd_eval(const Context& ctx) {
  const auto lm = load_model(ctx);
  auto l = labeled_split(ctx, lm.featurizer.prep);
  featurize(l, lm.featurizer);
  EvalResult r{classify::evaluate(lm.model, l.data.subset(classify::Split::train)),
               classify::evaluate(lm.model, l.data.subset(classify::Split::valid)), {}};
  r.text = report::table4_header() + report::table4_row(lm.model.feature, lm.model.kind, r.train, r.valid);
  r.text += "\nvalid confusion (rows true -1 0 1, columns predicted -1 0 1)\n";
  for (const auto& row : r.valid.confusion) {
    r.text += std::to_string(row[0]) + "\t" + std::to_string(row[1]) + "\t" + std::to_string(row[2]) + "\n";
  }
  write(ctx.out("eval_report.txt"), r.text);
  return r;
}

std::size_t cmd_score(const Context& ctx) {
  const auto tweets = filtered_tweets(ctx.cfg);
  const auto scores = tweet_scores(ctx, tweets);
  write(ctx.out("scores.csv"), classify::scores_to_csv(scores));
  return scores.size();
}

IndexResult cmd_index(const Context& ctx) {
  auto res = build_index(ctx);
  std::vector<std::string> idx_docs, vol_docs;
  std::string weekly = "week_start,region,n,mean_score\n";
  for (const auto& ri : res.regions) {
    idx_docs.push_back(sentiment::index_to_csv(ri.points));
    vol_docs.push_back(sentiment::vol_to_csv(ri.region, ri.vols));
    for (const auto& w : sentiment::weekly_mean(ri.points)) {
      weekly += format_date(w.week_start) + "," + std::string(region_name(ri.region)) + "," +
                std::to_string(w.n) + "," + format_double(w.mean) + "\n";
    }
    write(ctx.out("index_" + std::string(region_name(ri.region)) + ".svg"),
          svg::index_chart(ri.region, ri.points, ri.vols));
  }
  write(ctx.out("index.csv"), concat_csv(idx_docs, "date,region,n,mean_score,sum_score\n"));
  write(ctx.out("vol30.csv"), concat_csv(vol_docs, "date,region,vol30\n"));
  write(ctx.out("weekly.csv"), weekly);
  write(ctx.out("index_summary.txt"), res.table);
  return res;
}

std::optional<Which> parse_which(std::string_view s) {
  const std::string l = ascii_lower(trim(s));
  if (l == "trend") return Which::trend;
  if (l == "eq1") return Which::eq1;
  return std::nullopt;
}

std::string cmd_regress(const Context& ctx, Which which) {
  const auto idx = build_index(ctx);
  return which == Which::trend ? trend_regress(ctx, idx) : eq1_regress(ctx, idx);
}

ReportResult cmd_report(const Context& ctx) {
  ReportResult res;
  std::string summary;
  std::optional<IndexResult> idx;
  const bool use_model = ctx.cfg.score_source == config::ScoreSource::model;
  const bool eq1_inputs = ctx.cfg.has_path("trends") &&
                          (ctx.cfg.has_path("yields_us") || ctx.cfg.has_path("yields_gb"));

  std::vector<std::pair<std::string, std::function<void()>>> stages;
  stages.emplace_back("prep", [&] { cmd_prep(ctx); });
  if (use_model) {
    stages.emplace_back("train", [&] { summary += cmd_train(ctx).row + "\n"; });
    stages.emplace_back("score", [&] { cmd_score(ctx); });
  }
  stages.emplace_back("index", [&] {
    idx = cmd_index(ctx);
    summary += idx->table + "\n";
  });
  stages.emplace_back("regress_trend", [&] { summary += trend_regress(ctx, *idx) + "\n"; });
  if (eq1_inputs) stages.emplace_back("regress_eq1", [&] { summary += eq1_regress(ctx, *idx); });

  for (auto& [name, run] : stages) {
    StageStatus st{name, "ok", {}};
    if (!res.ok) {
      st.status = "skipped";
    } else {
      try {
        run();
      } catch (const Error& e) {
        st.status = "failed";
        st.error = e.what();
        res.ok = false;
      }
    }
    res.stages.push_back(std::move(st));
  }
  if (!eq1_inputs) res.stages.push_back({"regress_eq1", "skipped", "paths.trends or yields not set"});
  write(ctx.out("summary.txt"), summary);

  json inputs = json::array();
  for (const auto& [key, value] : ctx.cfg.paths) {
    if (value.empty()) continue;
    inputs.push_back({{"key", key}, {"path", value}, {"sha256", sha256_hex(read_file(ctx.cfg.resolve(key).string()))}});
  }
  json stages_json = json::array();
  for (const auto& s : res.stages) {
    json j{{"name", s.name}, {"status", s.status}};
    if (!s.error.empty()) j["error"] = s.error;
    stages_json.push_back(j);
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(ctx.out_dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name != "manifest.json") files.push_back(name);
  }
  std::sort(files.begin(), files.end());
  json outputs = json::array();
  for (const auto& f : files) {
    outputs.push_back({{"file", f}, {"sha256", sha256_hex(read_file(ctx.out(f).string()))}});
  }
  json manifest{{"versions", {{"inflsent", INFLSENT_VERSION}, {"manifest", 1}}},
                {"seed", ctx.cfg.seed},
                {"config_sha256", sha256_hex(ctx.cfg.canonical())},
                {"config", ctx.cfg.canonical()},
                {"inputs", inputs},
                {"stages", stages_json},
                {"outputs", outputs},
                {"ok", res.ok}};
  write(ctx.out("manifest.json"), manifest.dump(2) + "\n");
  return res;
}

}  // namespace infl::pipeline
