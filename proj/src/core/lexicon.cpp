#include "lexicon.hpp"

#include <cmath>

#include "error.hpp"
#include "util.hpp"

namespace infl::lexicon {

void ValenceLexicon::validate() const {
  for (const auto& [word, v] : entries) {
    if (!std::isfinite(v) || std::fabs(v) > kMaxValence) {
      fail(ErrorCode::invalid_argument, "lexicon: valence of '" + word + "' outside [-4, 4]");
    }
    if (negators.count(word)) {
      fail(ErrorCode::invalid_argument, "lexicon: '" + word + "' is both an entry and a negator");
    }
  }
  for (const auto& [word, m] : boosters) {
    if (!std::isfinite(m) || m <= 0.0) {
      fail(ErrorCode::invalid_argument, "lexicon: booster '" + word + "' needs a finite multiplier > 0");
    }
  }
}

LexFeatures lex_score(const std::vector<std::string>& tokens, const ValenceLexicon& lex) {
  if (tokens.empty()) return {};
  double pos = 0.0, neg = 0.0, neu = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = lex.entries.find(tokens[i]);
    double v = it == lex.entries.end() ? 0.0 : it->second;
    if (v == 0.0) {
      neu += 1.0;
      continue;
    }
    if (i > 0) {
      if (auto b = lex.boosters.find(tokens[i - 1]); b != lex.boosters.end()) v *= b->second;
    }
    const std::size_t from = i >= kNegationWindow ? i - kNegationWindow : 0;
    for (std::size_t j = from; j < i; ++j) {
      if (lex.negators.count(tokens[j])) {
        v = -v;
        break;
      }
    }
    if (v > 0) pos += v;
    else neg += -v;
  }
  const double z = pos + neg + neu;
  return {neg / z, neu / z, pos / z};
}

ValenceLexicon parse_lexicon(const std::string& text, const std::string& origin) {
  enum class Section { entries, negators, boosters } section = Section::entries;
  ValenceLexicon lex;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::string where = origin + ": line " + std::to_string(line_no) + ": ";
    const std::string header = ascii_lower(trim(line));
    if (header == "#entries") { section = Section::entries; continue; }
    if (header == "#negators") { section = Section::negators; continue; }
    if (header == "#boosters") { section = Section::boosters; continue; }

    auto cols = split(line, '\t');
    const std::string word = ascii_lower(trim(cols[0]));
    if (word.empty()) fail(ErrorCode::parse, where + "empty word");
    if (lex.entries.count(word) || lex.negators.count(word) || lex.boosters.count(word)) {
      fail(ErrorCode::parse, where + "duplicate word '" + word + "'");
    }
    if (section == Section::negators) {
      lex.negators.insert(word);
      continue;
    }
    if (cols.size() < 2) fail(ErrorCode::parse, where + "expected word<TAB>value");
    auto value = parse_double(cols[1]);
    if (!value) fail(ErrorCode::parse, where + "bad number '" + cols[1] + "'");
    if (section == Section::entries) {
      if (std::fabs(*value) > kMaxValence) {
        fail(ErrorCode::parse, where + "valence " + cols[1] + " outside [-4, 4]");
      }
      lex.entries.emplace(word, *value);
    } else {
      if (!(*value > 0.0) || !std::isfinite(*value)) {
        fail(ErrorCode::parse, where + "booster multiplier must be > 0");
      }
      lex.boosters.emplace(word, *value);
    }
  }
  lex.validate();
  return lex;
}

ValenceLexicon load_lexicon(const std::string& path) { return parse_lexicon(read_file(path), path); }

}  // namespace infl::lexicon
