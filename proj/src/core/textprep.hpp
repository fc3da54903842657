#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stemmer.hpp"

namespace infl::textprep {

// Inclusive code-point intervals removed by strip_emoji.
using CodePointRanges = std::vector<std::pair<char32_t, char32_t>>;

[[nodiscard]] CodePointRanges default_emoji_ranges();
// One interval per line, "1F600-1F64F" or a single "2764"; '#' starts a comment.
[[nodiscard]] CodePointRanges load_emoji_ranges(const std::string& path);

[[nodiscard]] std::set<std::string> default_stopwords();
// One word per line, UTF-8; blank lines ignored.
[[nodiscard]] std::set<std::string> load_stopwords(const std::string& path);

struct PrepConfig {
  std::set<std::string> stopwords = default_stopwords();
  bool remove_stopwords = true;
  bool stem = true;
  bool lowercase = true;
  bool drop_user_token = false;
  CodePointRanges emoji = default_emoji_ranges();

  void validate() const;
};

struct TokenDoc {
  std::string tweet_id;
  std::vector<std::string> tokens;
};

// Rewrites every "@name" whose '@' is not preceded by a word character
// to "@user"; name is a run of [A-Za-z0-9_].
[[nodiscard]] std::string normalize_mentions(std::string_view text);
// http:// or https:// (case-insensitive) up to the next whitespace -> "https".
[[nodiscard]] std::string normalize_links(std::string_view text);
// Drops every '#' not preceded by a word character; "a#b" is untouched.
[[nodiscard]] std::string strip_hashtags(std::string_view text);
[[nodiscard]] std::string strip_emoji(std::string_view text,
                                      const CodePointRanges& ranges = default_emoji_ranges());

// The four normalizers in order (mentions, links, hashtags, emoji), repeated
// until the text stops changing so that normalize is idempotent.
[[nodiscard]] std::string normalize(std::string_view text, const PrepConfig& cfg);

[[nodiscard]] bool is_punctuation(char32_t cp);
[[nodiscard]] bool is_space(char32_t cp);

// Lowercase, remove punctuation, split on whitespace, drop stopwords and,
// when cfg.stem is set, stem. `text` should already be normalized.
[[nodiscard]] TokenDoc tokenize_and_clean(std::string_view text, const PrepConfig& cfg,
                                          std::string tweet_id = {});

// Stemmed and unstemmed views of one tweet. Lexicon scoring needs the
// unstemmed tokens, TF-IDF uses the stemmed ones.
struct PreparedDoc {
  std::string tweet_id;
  std::vector<std::string> words;
  std::vector<std::string> stems;
};

[[nodiscard]] PreparedDoc prepare(std::string_view raw_text, const PrepConfig& cfg,
                                  std::string tweet_id = {});

}  // namespace infl::textprep
