#include "corpus.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "csv.hpp"
#include "error.hpp"
#include "util.hpp"

namespace infl {

std::string_view region_name(Region r) {
  switch (r) {
    case Region::US: return "US";
    case Region::GB: return "GB";
    case Region::EU: return "EU";
    case Region::CA: return "CA";
    case Region::ASIA: return "ASIA";
    case Region::OTHER: return "OTHER";
    case Region::UNKNOWN: return "UNKNOWN";
    case Region::ALL: return "ALL";
  }
  return "UNKNOWN";
}

std::optional<Region> parse_region_code(std::string_view s) {
  const std::string u = ascii_lower(trim(s));
  if (u == "us") return Region::US;
  if (u == "gb" || u == "uk") return Region::GB;
  if (u == "eu") return Region::EU;
  if (u == "ca") return Region::CA;
  if (u == "asia") return Region::ASIA;
  if (u == "other") return Region::OTHER;
  if (u == "unknown") return Region::UNKNOWN;
  if (u == "all" || u == "global") return Region::ALL;
  return std::nullopt;
}

std::optional<Sentiment> parse_sentiment(std::string_view s) {
  auto v = parse_int(s);
  if (!v || *v < -1 || *v > 1) return std::nullopt;
  return static_cast<Sentiment>(*v);
}

}  // namespace infl

namespace infl::corpus {

using nlohmann::json;

RegionMap default_region_map() {
  return {
      {"united states", Region::US},  {"usa", Region::US},
      {"america", Region::US},        {"new york", Region::US},
      {"california", Region::US},     {"texas", Region::US},
      {"united kingdom", Region::GB}, {"england", Region::GB},
      {"london", Region::GB},         {"scotland", Region::GB},
      {"wales", Region::GB},          {"germany", Region::EU},
      {"france", Region::EU},         {"italy", Region::EU},
      {"spain", Region::EU},          {"netherlands", Region::EU},
      {"ireland", Region::EU},        {"canada", Region::CA},
      {"toronto", Region::CA},        {"vancouver", Region::CA},
      {"china", Region::ASIA},        {"india", Region::ASIA},
      {"japan", Region::ASIA},        {"korea", Region::ASIA},
      {"malaysia", Region::ASIA},     {"thailand", Region::ASIA},
      {"singapore", Region::ASIA},
  };
}

RegionMap load_region_map(const std::string& path) {
  RegionMap map;
  for (const auto& row : csv::read_with_header(path, {"location", "region"})) {
    auto r = parse_region_code(row.fields[1]);
    if (!r || *r == Region::ALL) {
      fail(ErrorCode::parse,
           path + ": line " + std::to_string(row.line) + ": unknown region '" + row.fields[1] + "'");
    }
    map[ascii_lower(trim(row.fields[0]))] = *r;
  }
  return map;
}

Region resolve_region(std::string_view tag, const RegionMap& map) {
  tag = trim(tag);
  if (tag.empty()) return Region::UNKNOWN;
  if (auto code = parse_region_code(tag); code && *code != Region::ALL) return *code;
  auto it = map.find(ascii_lower(tag));
  return it == map.end() ? Region::OTHER : it->second;
}

std::vector<Tweet> parse_tweets(std::string_view jsonl, const DateRange& window,
                                const RegionMap& regions) {
  std::vector<Tweet> out;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= jsonl.size()) {
    auto nl = jsonl.find('\n', pos);
    std::string_view line = jsonl.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? jsonl.size() + 1 : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;

    auto bad = [&](const std::string& why) -> void {
      fail(ErrorCode::parse, "tweets line " + std::to_string(line_no) + ": " + why);
    };
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) bad("not a JSON object");

    auto str_field = [&](const char* key) -> std::string {
      auto it = rec.find(key);
      if (it == rec.end() || !it->is_string()) bad(std::string("missing string field '") + key + "'");
      return it->get<std::string>();
    };
    Tweet t;
    t.id = str_field("id");
    if (t.id.empty()) bad("empty id");
    auto ts = parse_timestamp(str_field("created_at"));
    if (!ts) bad("invalid created_at");
    t.created_at = *ts;
    t.text = str_field("text");
    if (trim(t.text).empty()) bad("empty text");
    if (auto it = rec.find("region"); it != rec.end() && !it->is_null()) {
      if (!it->is_string()) bad("region must be a string");
      t.region = resolve_region(it->get<std::string>(), regions);
    }
    if (!seen.insert(t.id).second) fail(ErrorCode::parse, "duplicate tweet id '" + t.id + "'");
    if (window.contains(day_of(t.created_at))) out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Tweet& a, const Tweet& b) { return a.created_at < b.created_at; });
  return out;
}

std::vector<Tweet> load_tweets(const std::string& path, const DateRange& window,
                               const RegionMap& regions) {
  return parse_tweets(read_file(path), window, regions);
}

// ---- keywords --------------------------------------------------------------

void KeywordDictionary::validate() const {
  const std::set<std::string>* sets[] = {&price_terms, &inflation_terms, &deflation_terms};
  for (const auto* s : sets) {
    for (const auto& p : *s) {
      if (trim(p).empty()) fail(ErrorCode::invalid_argument, "keyword dictionary: empty phrase");
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (const auto& p : *sets[a]) {
        if (sets[b]->count(p)) {
          fail(ErrorCode::invalid_argument, "keyword dictionary: '" + p + "' in two groups");
        }
      }
    }
  }
}

bool KeywordDictionary::empty() const {
  return price_terms.empty() && inflation_terms.empty() && deflation_terms.empty();
}

KeywordDictionary default_dictionary() {
  return {
      {"price", "prices", "food price", "gasoline price", "gas price", "rent price"},
      {"inflation", "hyperinflation", "high gasoline price", "high food price", "high gas price",
       "high rent price"},
      {"deflation", "disinflation", "low gasoline price", "low food price", "low gas price",
       "low rent price"},
  };
}

TrendKeywords default_trend_keywords() {
  return {
      {"inflation", "expensive bills", "high materials prices", "high gasoline prices", "high rent",
       "high house prices"},
      {"price", "cost of living", "interest rate"},
      {"deflation", "disinflation", "promotions", "sales", "low cost of livings",
       "less expensive bills"},
  };
}

KeywordConfig load_keyword_config(const std::string& path) {
  KeywordConfig cfg;
  std::set<std::string>* current = nullptr;
  std::size_t line_no = 0;
  for (const auto& raw : split(read_file(path), '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == ';' || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorCode::parse, path + ": line " + std::to_string(line_no) + ": bad section");
      const std::string name = ascii_lower(trim(line.substr(1, line.size() - 2)));
      if (name == "price") current = &cfg.dictionary.price_terms;
      else if (name == "inflation") current = &cfg.dictionary.inflation_terms;
      else if (name == "deflation") current = &cfg.dictionary.deflation_terms;
      else if (name == "trend.inflation") current = &cfg.trends.inflation;
      else if (name == "trend.neutral") current = &cfg.trends.neutral;
      else if (name == "trend.deflation") current = &cfg.trends.deflation;
      else fail(ErrorCode::parse, path + ": unknown section [" + name + "]");
      continue;
    }
    if (!current) fail(ErrorCode::parse, path + ": line " + std::to_string(line_no) + ": phrase outside a section");
    std::string phrase;
    for (const auto& w : split(ascii_lower(line), ' ')) {
      if (w.empty()) continue;
      if (!phrase.empty()) phrase.push_back(' ');
      phrase += w;
    }
    current->insert(phrase);
  }
  cfg.dictionary.validate();
  if (cfg.dictionary.empty()) fail(ErrorCode::parse, path + ": keyword dictionary is empty");
  return cfg;
}

namespace {

// Lowercase and collapse whitespace runs to a single space.
std::string normalize_for_match(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

bool contains_phrase(const std::string& hay, const std::string& phrase) {
  std::size_t pos = 0;
  while ((pos = hay.find(phrase, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_word_byte(static_cast<unsigned char>(hay[pos - 1]));
    const std::size_t end = pos + phrase.size();
    const bool right_ok =
        end == hay.size() || !is_word_byte(static_cast<unsigned char>(hay[end]));
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace

bool matches_keywords(std::string_view text, const KeywordDictionary& dict) {
  const std::string hay = normalize_for_match(text);
  for (const auto* set : {&dict.price_terms, &dict.inflation_terms, &dict.deflation_terms}) {
    for (const auto& phrase : *set) {
      if (contains_phrase(hay, phrase)) return true;
    }
  }
  return false;
}

std::vector<Tweet> keyword_filter(const std::vector<Tweet>& tweets, const KeywordDictionary& dict) {
  if (dict.empty()) fail(ErrorCode::invalid_argument, "keyword dictionary is empty");
  std::vector<Tweet> out;
  std::copy_if(tweets.begin(), tweets.end(), std::back_inserter(out),
               [&](const Tweet& t) { return matches_keywords(t.text, dict); });
  return out;
}

// ---- labels --------------------------------------------------------------------

std::vector<LabeledText> load_labels(const std::string& path) {
  std::vector<LabeledText> out;
  for (const auto& row : csv::read_with_header(path, {"text", "label"})) {
    auto label = parse_sentiment(row.fields[1]);
    if (!label) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(row.line) + ": label '" +
                                 row.fields[1] + "' not in {-1,0,1}");
    }
    out.push_back({row.fields[0], *label});
  }
  return out;
}

// ---- trends ------------------------------------------------------------------------

std::string_view trend_group_name(TrendGroup g) {
  switch (g) {
    case TrendGroup::inflation: return "inflation";
    case TrendGroup::neutral: return "neutral";
    case TrendGroup::deflation: return "deflation";
  }
  return "neutral";
}

std::vector<TrendSeries> load_trends(const std::string& path) {
  std::map<std::pair<TrendGroup, Region>, TrendSeries> by_key;
  for (const auto& row : csv::read_with_header(path, {"date", "region", "group", "value"})) {
    const std::string where = path + ": line " + std::to_string(row.line) + ": ";
    auto date = parse_date(row.fields[0]);
    if (!date) fail(ErrorCode::parse, where + "invalid date '" + row.fields[0] + "'");
    auto region = parse_region_code(row.fields[1]);
    if (!region) fail(ErrorCode::parse, where + "unknown region '" + row.fields[1] + "'");
    const std::string g = ascii_lower(trim(row.fields[2]));
    TrendGroup group;
    if (g == "inflation") group = TrendGroup::inflation;
    else if (g == "neutral") group = TrendGroup::neutral;
    else if (g == "deflation") group = TrendGroup::deflation;
    else fail(ErrorCode::parse, where + "unknown group '" + row.fields[2] + "'");
    auto value = parse_int(row.fields[3]);
    if (!value || *value < 0 || *value > 100) {
      fail(ErrorCode::parse, where + "trend value must be an integer in 0..100");
    }
    auto& series = by_key[{group, *region}];
    series.group = group;
    series.region = *region;
    if (!series.points.empty()) {
      const Date prev = series.points.back().week_start;
      if (!(prev < *date)) fail(ErrorCode::parse, where + "dates not strictly increasing");
      if (*date - prev != std::chrono::days{7}) fail(ErrorCode::parse, where + "series is not weekly");
    }
    series.points.push_back({*date, static_cast<int>(*value)});
  }
  std::vector<TrendSeries> out;
  for (auto& [key, s] : by_key) out.push_back(std::move(s));
  return out;
}

// ---- yields ------------------------------------------------------------------------

std::string Percent::str() const {
  const std::int64_t mag = units < 0 ? -units : units;
  std::string frac = std::to_string(mag % kScale);
  frac.insert(0, 6 - frac.size(), '0');
  while (frac.size() > 2 && frac.back() == '0') frac.pop_back();
  return (units < 0 ? "-" : "") + std::to_string(mag / kScale) + "." + frac;
}

std::optional<Percent> parse_percent(std::string_view s) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 6 || whole.size() > 9) return std::nullopt;
  auto digits = [](std::string_view d) {
    return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(whole) || !digits(frac)) return std::nullopt;
  std::int64_t units = 0;
  for (char c : whole) units = units * 10 + (c - '0');
  std::int64_t f = 0;
  for (std::size_t i = 0; i < 6; ++i) f = f * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  units = units * Percent::kScale + f;
  return Percent{neg ? -units : units};
}

YieldSeries load_yields(const std::string& path, Region region) {
  if (region != Region::US && region != Region::GB) {
    fail(ErrorCode::invalid_argument, "yield series region must be US or GB");
  }
  YieldSeries ys{region, {}};
  for (const auto& row : csv::read_with_header(path, {"date", "nominal", "real"})) {
    const std::string where = path + ": line " + std::to_string(row.line) + ": ";
    auto date = parse_date(row.fields[0]);
    auto nominal = parse_percent(row.fields[1]);
    auto real = parse_percent(row.fields[2]);
    if (!date || !nominal || !real) {
      fail(ErrorCode::parse, where + "malformed record");
    }
    if (!ys.points.empty() && !(ys.points.back().date < *date)) {
      fail(ErrorCode::parse, where + "dates not strictly increasing");
    }
    ys.points.push_back({*date, *nominal, *real});
  }
  return ys;
}

BreakEvenSeries breakeven(const YieldSeries& y) {
  BreakEvenSeries out{y.region, {}};
  out.points.reserve(y.points.size());
  for (const auto& p : y.points) out.points.push_back({p.date, p.nominal - p.real});
  return out;
}

std::vector<YearSummary> summarize_by_year(const BreakEvenSeries& series) {
  if (series.points.empty()) fail(ErrorCode::invalid_argument, "break-even series is empty");
  std::map<int, std::vector<double>> groups;
  for (const auto& p : series.points) groups[year_of(p.date)].push_back(p.rate.value());
  std::vector<YearSummary> out;
  for (const auto& [year, xs] : groups) {
    out.push_back({year, xs.size(), mean(xs), sample_std(xs)});
  }
  return out;
}

std::string render_year_table(const std::vector<YearSummary>& rows, std::string_view label) {
  std::string head = std::string(label) + "\tStats (%)";
  std::string mean_row = "\tmean";
  std::string std_row = "\tstd";
  for (const auto& r : rows) {
    head += "\t" + std::to_string(r.year);
    mean_row += "\t" + format_fixed(r.mean, 2);
    std_row += "\t" + (r.std ? format_fixed(*r.std, 2) : std::string("-"));
  }
  return head + "\n" + mean_row + "\n" + std_row + "\n";
}

}  // namespace infl::corpus
