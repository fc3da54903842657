#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace infl::lexicon {

inline constexpr double kMaxValence = 4.0;
inline constexpr std::size_t kNegationWindow = 3;

struct ValenceLexicon {
  std::map<std::string, double> entries;   // valence in [-4, 4]
  std::set<std::string> negators;
  std::map<std::string, double> boosters;  // multiplier > 0

  void validate() const;
};

struct LexFeatures {
  double neg = 0.0;
  double neu = 1.0;
  double pos = 0.0;
};

// Simplified VADER-style aggregation over unstemmed tokens:
//   * a token's valence comes from `entries` (0 when absent),
//   * a negator among the three preceding tokens flips its sign,
//   * a booster immediately before it scales its magnitude,
// then pos / neg / neu are the positive mass, negative mass and count of
// zero-valence tokens, normalized to sum to 1. An empty doc is (0, 1, 0).
[[nodiscard]] LexFeatures lex_score(const std::vector<std::string>& tokens,
                                    const ValenceLexicon& lex);

// TSV with optional "#entries", "#negators", "#boosters" section headers;
// lines before the first header are entries. Entry and booster lines are
// word<TAB>value (extra columns, as in the VADER distribution file, are
// ignored); negator lines hold just the word.
[[nodiscard]] ValenceLexicon load_lexicon(const std::string& path);
[[nodiscard]] ValenceLexicon parse_lexicon(const std::string& text, const std::string& origin);

}  // namespace infl::lexicon
