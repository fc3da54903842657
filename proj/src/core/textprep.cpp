#include "textprep.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"
#include "util.hpp"

namespace infl::textprep {

namespace {

// Code points with Unicode general category P* in the blocks tweets use in
// practice (Latin-1, Greek, Armenian, Hebrew, Arabic, Devanagari, Thai,
// General/Supplemental Punctuation, CJK, fullwidth forms).
constexpr std::array<std::pair<char32_t, char32_t>, 76> kPunctuation{{
    {0x00A1, 0x00A1}, {0x00A7, 0x00A7}, {0x00AB, 0x00AB}, {0x00B6, 0x00B7}, {0x00BB, 0x00BB},
    {0x00BF, 0x00BF}, {0x037E, 0x037E}, {0x0387, 0x0387}, {0x055A, 0x055F}, {0x0589, 0x058A},
    {0x05BE, 0x05BE}, {0x05C0, 0x05C0}, {0x05C3, 0x05C3}, {0x05C6, 0x05C6}, {0x05F3, 0x05F4},
    {0x0609, 0x060A}, {0x060C, 0x060D}, {0x061B, 0x061B}, {0x061E, 0x061F}, {0x066A, 0x066D},
    {0x06D4, 0x06D4}, {0x0964, 0x0965}, {0x0970, 0x0970}, {0x0E4F, 0x0E4F}, {0x0E5A, 0x0E5B},
    {0x2010, 0x2027}, {0x2030, 0x2043}, {0x2045, 0x2051}, {0x2053, 0x205E}, {0x207D, 0x207E},
    {0x208D, 0x208E}, {0x2308, 0x230B}, {0x2329, 0x232A}, {0x2768, 0x2775}, {0x27C5, 0x27C6},
    {0x27E6, 0x27EF}, {0x2983, 0x2998}, {0x29D8, 0x29DB}, {0x29FC, 0x29FD}, {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF}, {0x2E00, 0x2E2E}, {0x2E30, 0x2E4F}, {0x3001, 0x3003}, {0x3008, 0x3011},
    {0x3014, 0x301F}, {0x3030, 0x3030}, {0x303D, 0x303D}, {0x30A0, 0x30A0}, {0x30FB, 0x30FB},
    {0xFE10, 0xFE19}, {0xFE30, 0xFE52}, {0xFE54, 0xFE61}, {0xFE63, 0xFE63}, {0xFE68, 0xFE68},
    {0xFE6A, 0xFE6B}, {0xFF01, 0xFF03}, {0xFF05, 0xFF0A}, {0xFF0C, 0xFF0F}, {0xFF1A, 0xFF1B},
    {0xFF1F, 0xFF20}, {0xFF3B, 0xFF3D}, {0xFF3F, 0xFF3F}, {0xFF5B, 0xFF5B}, {0xFF5D, 0xFF5D},
    {0xFF5F, 0xFF65}, {0x10100, 0x10102}, {0x1039F, 0x1039F}, {0x103D0, 0x103D0},
    {0x1056F, 0x1056F}, {0x10857, 0x10857}, {0x1091F, 0x1091F}, {0x1093F, 0x1093F},
    {0x10A50, 0x10A58}, {0x10A7F, 0x10A7F}, {0x16FE2, 0x16FE2},
}};

bool in_ranges(char32_t cp, const CodePointRanges& ranges) {
  return std::any_of(ranges.begin(), ranges.end(),
                     [cp](const auto& r) { return r.first <= cp && cp <= r.second; });
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::optional<char32_t> parse_hex(std::string_view s) {
  s = trim(s);
  if (s.size() > 2 && (s.substr(0, 2) == "U+" || s.substr(0, 2) == "u+" || s.substr(0, 2) == "0x")) {
    s.remove_prefix(2);
  }
  if (s.empty() || s.size() > 6) return std::nullopt;
  char32_t v = 0;
  for (char c : s) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<char32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<char32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v |= static_cast<char32_t>(c - 'A' + 10);
    else return std::nullopt;
  }
  if (v > 0x10FFFF) return std::nullopt;
  return v;
}

bool all_lower_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

CodePointRanges default_emoji_ranges() {
  return {
      {0x1F000, 0x1FAFF},  // pictographs, emoticons, transport, flags, ...
      {0x2600, 0x27BF},    // miscellaneous symbols, dingbats
      {0x2300, 0x23FF},    // miscellaneous technical
      {0x2B00, 0x2BFF},    // arrows, stars
      {0x2190, 0x21FF},    // arrows
      {0x25A0, 0x25FF},    // geometric shapes
      {0x2122, 0x2122},    {0x2139, 0x2139}, {0x24C2, 0x24C2},
      {0x3030, 0x3030},    {0x303D, 0x303D}, {0x3297, 0x3297}, {0x3299, 0x3299},
      {0x200D, 0x200D},    // zero-width joiner
      {0x20E3, 0x20E3},    // combining keycap
      {0xFE00, 0xFE0F},    // variation selectors
      {0xE0020, 0xE007F},  // tag characters
  };
}

CodePointRanges load_emoji_ranges(const std::string& path) {
  CodePointRanges out;
  std::size_t line_no = 0;
  for (const auto& raw : split(read_file(path), '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto dash = line.find('-');
    auto lo = parse_hex(line.substr(0, dash));
    auto hi = dash == std::string_view::npos ? lo : parse_hex(line.substr(dash + 1));
    if (!lo || !hi || *hi < *lo) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(line_no) + ": bad code-point interval");
    }
    out.emplace_back(*lo, *hi);
  }
  return out;
}

std::set<std::string> default_stopwords() {
  return {
      "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
      "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
      "by", "can", "could", "d", "did", "do", "does", "doing", "during", "each", "for", "from",
      "further", "had", "has", "have", "having", "he", "hed", "her", "here", "heres", "hers",
      "herself", "hes", "him", "himself", "his", "how", "hows", "i", "id", "if", "im", "in",
      "into", "is", "it", "its", "itself", "ive", "just", "let", "lets", "ll", "m", "me", "my",
      "myself", "now", "o", "of", "off", "on", "once", "only", "or", "other", "ought", "our",
      "ours", "ourselves", "out", "own", "re", "s", "same", "she", "shes",
      "should", "so", "some", "such", "t", "than", "that", "thats", "the", "their", "theirs",
      "them", "themselves", "then", "there", "theres", "these", "they", "theyd", "theyll",
      "theyre", "theyve", "this", "those", "through", "to", "too", "until", "ve", "was", "we",
      "were", "weve", "what", "whats", "when", "whens", "where", "wheres", "which",
      "while", "who", "whom", "whos", "why", "whys", "will", "with", "would", "y", "you", "youd",
      "youll", "your", "youre", "yours", "yourself", "yourselves", "youve",
  };
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::set<std::string> out;
  for (const auto& raw : split(read_file(path), '\n')) {
    auto w = trim(raw);
    if (!w.empty()) out.insert(ascii_lower(w));
  }
  return out;
}

void PrepConfig::validate() const {
  if (remove_stopwords && stopwords.empty()) {
    fail(ErrorCode::invalid_argument, "stopword removal enabled with an empty stopword set");
  }
}

std::string normalize_mentions(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const bool token_start = i == 0 || !is_word_byte(static_cast<unsigned char>(text[i - 1]));
    if (text[i] == '@' && token_start && i + 1 < text.size() &&
        is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
      out += "@user";
      ++i;
      while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string normalize_links(std::string_view text) {
  const std::string lower = ascii_lower(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::string_view rest = std::string_view(lower).substr(i);
    if (rest.starts_with("http://") || rest.starts_with("https://")) {
      out += "https";
      while (i < text.size() && !is_ascii_space(text[i])) ++i;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string strip_hashtags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#' && (i == 0 || !is_word_byte(static_cast<unsigned char>(text[i - 1])))) {
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

namespace {

std::string strip_emoji_once(std::string_view text, const CodePointRanges& ranges) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    auto d = decode_utf8(text, i);
    if (!(d.valid && in_ranges(d.cp, ranges))) out.append(text.substr(i, d.len));
    i += d.len;
  }
  return out;
}

}  // namespace

std::string strip_emoji(std::string_view text, const CodePointRanges& ranges) {
  // Removing a code point can join stray bytes into a new one, so repeat
  // until nothing changes; every round that changes the text shrinks it.
  std::string cur = strip_emoji_once(text, ranges);
  for (std::string next; (next = strip_emoji_once(cur, ranges)) != cur;) cur = std::move(next);
  return cur;
}

std::string normalize(std::string_view text, const PrepConfig& cfg) {
  auto once = [&](std::string_view t) {
    return strip_emoji(strip_hashtags(normalize_links(normalize_mentions(t))), cfg.emoji);
  };
  // Deleting '#' or an emoji can expose a new mention or link ("@#bob",
  // "#http://x"), so the chain runs to a fixed point. Rewrites after the
  // first round only happen where a deletion occurred, and the number of
  // deletable characters never grows, so this terminates.
  std::string cur = once(text);
  for (std::string next; (next = once(cur)) != cur;) cur = std::move(next);
  return cur;
}

bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  return std::any_of(kPunctuation.begin(), kPunctuation.end(),
                     [cp](const auto& r) { return r.first <= cp && cp <= r.second; });
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

std::vector<std::string> clean_tokens(std::string_view text, const PrepConfig& cfg, bool apply_stem) {
  cfg.validate();
  std::vector<std::string> tokens;
  const std::string lowered = cfg.lowercase ? ascii_lower(text) : std::string(text);

  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    // Residue of a malformed link ("http:/x" -> "httpx") is folded into the
    // link placeholder so no other token carries "http".
    if (current != "https" && ascii_lower(current).find("http") != std::string::npos) {
      current = "https";
    }
    const bool drop = (cfg.remove_stopwords && cfg.stopwords.count(current)) ||
                      (cfg.drop_user_token && current == "user");
    if (!drop) {
      tokens.push_back(apply_stem && all_lower_alpha(current) ? stem(current) : current);
    }
    current.clear();
  };

  std::size_t i = 0;
  while (i < lowered.size()) {
    auto d = decode_utf8(lowered, i);
    if (d.valid && is_space(d.cp)) {
      flush();
    } else if (!(d.valid && is_punctuation(d.cp))) {
      current.append(lowered, i, d.len);
    }
    i += d.len;
  }
  flush();
  return tokens;
}

}  // namespace

TokenDoc tokenize_and_clean(std::string_view text, const PrepConfig& cfg, std::string tweet_id) {
  return {std::move(tweet_id), clean_tokens(text, cfg, cfg.stem)};
}

PreparedDoc prepare(std::string_view raw_text, const PrepConfig& cfg, std::string tweet_id) {
  PreparedDoc out{std::move(tweet_id), clean_tokens(normalize(raw_text, cfg), cfg, false), {}};
  out.stems.reserve(out.words.size());
  for (const auto& w : out.words) {
    out.stems.push_back(cfg.stem && all_lower_alpha(w) ? stem(w) : w);
  }
  return out;
}

}  // namespace infl::textprep
