#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "error.hpp"
#include "util.hpp"

namespace infl::config {

namespace fs = std::filesystem;

RawConfig RawConfig::parse(std::string_view text, const std::string& origin) {
  RawConfig cfg;
  std::string section;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string where = origin + ": line " + std::to_string(line_no) + ": ";
    // strip comments outside quotes
    std::string line;
    bool quoted = false;
    for (char c : raw) {
      if (c == '"') quoted = !quoted;
      if (c == '#' && !quoted) break;
      line += c;
    }
    if (quoted) fail(ErrorCode::parse, where + "unterminated quote");
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']' || l.size() < 3) fail(ErrorCode::parse, where + "malformed section header");
      section = ascii_lower(trim(l.substr(1, l.size() - 2)));
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::parse, where + "expected key = value");
    std::string key = ascii_lower(trim(l.substr(0, eq)));
    std::string_view value = trim(l.substr(eq + 1));
    if (key.empty()) fail(ErrorCode::parse, where + "empty key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (!section.empty()) key = section + "." + key;
    if (cfg.values_.count(key)) fail(ErrorCode::parse, where + "duplicate key '" + key + "'");
    cfg.values_[key] = std::string(value);
  }
  return cfg;
}

RawConfig RawConfig::load(const std::string& path) {
  RawConfig cfg = parse(read_file(path), path);
  cfg.base_dir = fs::absolute(fs::path(path)).parent_path();
  return cfg;
}

void RawConfig::set(const std::string& key, const std::string& value) { values_[key] = value; }

std::optional<std::string> RawConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool PipelineConfig::has_path(const std::string& key) const {
  auto it = paths.find(key);
  return it != paths.end() && !it->second.empty();
}

fs::path PipelineConfig::resolve(const std::string& key) const {
  if (!has_path(key)) fail(ErrorCode::invalid_argument, "config: paths." + key + " is not set");
  fs::path p(paths.at(key));
  return p.is_absolute() ? p : (base_dir / p).lexically_normal();
}

namespace {

std::string join_regions(const std::vector<Region>& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += region_name(rs[i]);
  }
  return out;
}

}  // namespace

std::string PipelineConfig::canonical() const {
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : paths) kv["paths." + k] = v;
  for (const auto& p : periods) {
    kv["periods." + std::string(sentiment::period_name(p.name))] =
        format_date(p.range.begin) + ".." + format_date(p.range.end);
  }
  kv["seed"] = std::to_string(seed);
  kv["model.feature"] = classify::feature_kind_name(feature);
  kv["model.kind"] = classify::model_kind_name(model);
  kv["model.alpha"] = format_double(alpha);
  kv["model.l2"] = format_double(logreg.l2);
  kv["model.lr"] = format_double(logreg.lr);
  kv["model.iters"] = std::to_string(logreg.iters);
  kv["model.svm_reg"] = format_double(svm_reg);
  kv["model.svm_epochs"] = std::to_string(svm_epochs);
  kv["model.min_df"] = std::to_string(min_df);
  kv["model.train_fraction"] = format_double(train_fraction);
  kv["model.file"] = model_file;
  kv["prep.drop_user_token"] = drop_user_token ? "true" : "false";
  kv["prep.remove_stopwords"] = remove_stopwords ? "true" : "false";
  kv["prep.stem"] = stem ? "true" : "false";
  kv["index.scores"] = score_source == ScoreSource::model ? "model" : "external";
  kv["index.regions"] = join_regions(index_regions);
  kv["index.min_n"] = std::to_string(min_n);
  kv["regress.ar_p"] = ar_p ? std::to_string(*ar_p) : "auto";
  kv["regress.ar_max_p"] = std::to_string(ar_max_p);
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

void PipelineConfig::validate() const {
  sentiment::validate_periods(periods);
  for (const auto& [key, value] : paths) {
    if (value.empty()) continue;
    const auto p = resolve(key);
    if (!fs::exists(p)) {
      fail(ErrorCode::io, "config: paths." + key + " '" + p.string() + "' does not exist");
    }
  }
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_argument, "config: model.alpha must be > 0");
  if (!(logreg.lr > 0.0)) fail(ErrorCode::invalid_argument, "config: model.lr must be > 0");
  if (!(logreg.l2 >= 0.0)) fail(ErrorCode::invalid_argument, "config: model.l2 must be >= 0");
  if (logreg.iters < 1) fail(ErrorCode::invalid_argument, "config: model.iters must be >= 1");
  if (!(svm_reg > 0.0)) fail(ErrorCode::invalid_argument, "config: model.svm_reg must be > 0");
  if (svm_epochs < 1) fail(ErrorCode::invalid_argument, "config: model.svm_epochs must be >= 1");
  if (min_df < 1) fail(ErrorCode::invalid_argument, "config: model.min_df must be >= 1");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    fail(ErrorCode::invalid_argument, "config: model.train_fraction must be in (0, 1)");
  }
  if (model_file.empty()) fail(ErrorCode::invalid_argument, "config: model.file is empty");
  if (index_regions.empty()) fail(ErrorCode::invalid_argument, "config: index.regions is empty");
  if (min_n < 1) fail(ErrorCode::invalid_argument, "config: index.min_n must be >= 1");
}

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> k = {
        "seed",          "periods.before",     "periods.during",     "periods.after",
        "model.feature", "model.kind",         "model.alpha",        "model.l2",
        "model.lr",      "model.iters",        "model.svm_reg",      "model.svm_epochs",
        "model.min_df",  "model.train_fraction", "model.file",       "prep.drop_user_token",
        "prep.remove_stopwords", "prep.stem",  "index.scores",       "index.regions",
        "index.min_n",   "regress.ar_p",       "regress.ar_max_p"};
    for (const auto& p : kPathKeys) k.insert("paths." + p);
    return k;
  }();
  return keys;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& want) {
  fail(ErrorCode::invalid_argument, "config: " + key + " = '" + value + "': expected " + want);
}

double to_double(const std::string& key, const std::string& v) {
  auto d = parse_double(v);
  if (!d || !std::isfinite(*d)) bad_value(key, v, "a number");
  return *d;
}

long long to_int(const std::string& key, const std::string& v, long long lo) {
  auto i = parse_int(v);
  if (!i || *i < lo) bad_value(key, v, "an integer >= " + std::to_string(lo));
  return *i;
}

bool to_bool(const std::string& key, const std::string& v) {
  const std::string l = ascii_lower(v);
  if (l == "true" || l == "1" || l == "yes") return true;
  if (l == "false" || l == "0" || l == "no") return false;
  bad_value(key, v, "true or false");
}

}  // namespace

std::uint64_t parse_seed(const std::string& v) {
  std::uint64_t seed = 0;
  const auto t = trim(v);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), seed);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    bad_value("seed", v, "an unsigned 64-bit integer");
  }
  return seed;
}

PipelineConfig build(const RawConfig& raw) {
  for (const auto& [k, v] : raw.values()) {
    if (!known_keys().count(k)) fail(ErrorCode::invalid_argument, "config: unknown key '" + k + "'");
  }
  PipelineConfig c;
  c.base_dir = raw.base_dir;
  for (const auto& p : kPathKeys) {
    if (auto v = raw.get("paths." + p)) c.paths[p] = *v;
  }
  for (auto& p : c.periods) {
    const std::string key = "periods." + std::string(sentiment::period_name(p.name));
    if (auto v = raw.get(key)) {
      auto r = parse_date_range(*v);
      if (!r) bad_value(key, *v, "YYYY-MM-DD..YYYY-MM-DD");
      p.range = *r;
    }
  }
  auto with = [&](const std::string& key, auto&& apply) {
    if (auto v = raw.get(key)) apply(key, *v);
  };
  with("seed", [&](auto&, auto& v) { c.seed = parse_seed(v); });
  with("model.feature", [&](auto& k, auto& v) {
    auto f = classify::parse_feature_kind(v);
    if (!f) bad_value(k, v, "lex or tfidf");
    c.feature = *f;
  });
  with("model.kind", [&](auto& k, auto& v) {
    auto m = classify::parse_model_kind(v);
    if (!m) bad_value(k, v, "mnb, cnb, logreg or linsvm");
    c.model = *m;
  });
  with("model.alpha", [&](auto& k, auto& v) { c.alpha = to_double(k, v); });
  with("model.l2", [&](auto& k, auto& v) { c.logreg.l2 = to_double(k, v); });
  with("model.lr", [&](auto& k, auto& v) { c.logreg.lr = to_double(k, v); });
  with("model.iters", [&](auto& k, auto& v) { c.logreg.iters = static_cast<int>(to_int(k, v, 1)); });
  with("model.svm_reg", [&](auto& k, auto& v) { c.svm_reg = to_double(k, v); });
  with("model.svm_epochs", [&](auto& k, auto& v) { c.svm_epochs = static_cast<int>(to_int(k, v, 1)); });
  with("model.min_df", [&](auto& k, auto& v) { c.min_df = static_cast<std::size_t>(to_int(k, v, 1)); });
  with("model.train_fraction", [&](auto& k, auto& v) { c.train_fraction = to_double(k, v); });
  with("model.file", [&](auto&, auto& v) { c.model_file = v; });
  with("prep.drop_user_token", [&](auto& k, auto& v) { c.drop_user_token = to_bool(k, v); });
  with("prep.remove_stopwords", [&](auto& k, auto& v) { c.remove_stopwords = to_bool(k, v); });
  with("prep.stem", [&](auto& k, auto& v) { c.stem = to_bool(k, v); });
  with("index.scores", [&](auto& k, auto& v) {
    const std::string l = ascii_lower(v);
    if (l == "model") c.score_source = ScoreSource::model;
    else if (l == "external") c.score_source = ScoreSource::external;
    else bad_value(k, v, "model or external");
  });
  with("index.regions", [&](auto& k, auto& v) {
    c.index_regions.clear();
    for (const auto& part : split(v, ',')) {
      auto r = parse_region_code(part);
      if (!r || *r == Region::OTHER || *r == Region::UNKNOWN) bad_value(k, v, "US, GB, EU, CA, ASIA or ALL");
      if (std::find(c.index_regions.begin(), c.index_regions.end(), *r) == c.index_regions.end()) {
        c.index_regions.push_back(*r);
      }
    }
  });
  with("index.min_n", [&](auto& k, auto& v) { c.min_n = static_cast<std::size_t>(to_int(k, v, 1)); });
  with("regress.ar_p", [&](auto& k, auto& v) {
    if (ascii_lower(v) == "auto") c.ar_p.reset();
    else c.ar_p = static_cast<std::size_t>(to_int(k, v, 0));
  });
  with("regress.ar_max_p", [&](auto& k, auto& v) { c.ar_max_p = static_cast<std::size_t>(to_int(k, v, 0)); });
  c.validate();
  return c;
}

}  // namespace infl::config
