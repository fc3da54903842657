#include "stemmer.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>

namespace infl::textprep {

namespace {

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y': return true;
    default: return false;
  }
}

bool is_vowel_wxy(char c) { return is_vowel(c) || c == 'w' || c == 'x' || c == 'Y'; }

bool is_valid_li(char c) {
  switch (c) {
    case 'c': case 'd': case 'e': case 'g': case 'h':
    case 'k': case 'm': case 'n': case 'r': case 't': return true;
    default: return false;
  }
}

bool ends_with(const std::string& w, std::string_view s) {
  return w.size() >= s.size() && std::string_view(w).substr(w.size() - s.size()) == s;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

class Stemmer {
 public:
  explicit Stemmer(std::string w) : w_(std::move(w)) {}

  std::string run() {
    if (auto special = exception1()) return std::string(*special);
    if (w_.size() < 3) return w_;

    prelude();
    mark_regions();
    step_1a();
    if (!exception2()) {
      step_1b();
      step_1c();
      step_2();
      step_3();
      step_4();
      step_5();
    }
    postlude();
    return w_;
  }

 private:
  std::string w_;
  std::size_t p1_ = 0;
  std::size_t p2_ = 0;
  bool y_found_ = false;

  std::optional<std::string_view> exception1() const {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 18> table{{
        {"skis", "ski"},      {"skies", "sky"},   {"dying", "die"},   {"lying", "lie"},
        {"tying", "tie"},     {"idly", "idl"},    {"gently", "gentl"}, {"ugly", "ugli"},
        {"early", "earli"},   {"only", "onli"},   {"singly", "singl"}, {"sky", "sky"},
        {"news", "news"},     {"howe", "howe"},   {"atlas", "atlas"}, {"cosmos", "cosmos"},
        {"bias", "bias"},     {"andes", "andes"},
    }};
    for (const auto& [from, to] : table) {
      if (w_ == from) return to;
    }
    return std::nullopt;
  }

  bool exception2() const {
    for (std::string_view s : {"inning", "outing", "canning", "herring", "earring", "proceed",
                               "exceed", "succeed"}) {
      if (w_ == s) return true;
    }
    return false;
  }

  void prelude() {
    if (!w_.empty() && w_.front() == '\'') w_.erase(0, 1);
    if (!w_.empty() && w_.front() == 'y') {
      w_.front() = 'Y';
      y_found_ = true;
    }
    for (std::size_t i = 1; i < w_.size(); ++i) {
      if (w_[i] == 'y' && is_vowel(w_[i - 1])) {
        w_[i] = 'Y';
        y_found_ = true;
      }
    }
  }

  // Position just past the first non-vowel that follows a vowel, searching
  // from `from`; w_.size() if there is none.
  std::size_t region_after(std::size_t from) const {
    std::size_t i = from;
    while (i < w_.size() && !is_vowel(w_[i])) ++i;
    while (i < w_.size() && is_vowel(w_[i])) ++i;
    if (i >= w_.size()) return w_.size();
    return i + 1;
  }

  void mark_regions() {
    p1_ = w_.size();
    p2_ = w_.size();
    std::size_t start = std::string::npos;
    for (std::string_view pre : {"gener", "commun", "arsen"}) {
      if (std::string_view(w_).substr(0, pre.size()) == pre) {
        start = pre.size();
        break;
      }
    }
    p1_ = start != std::string::npos ? start : region_after(0);
    p2_ = p1_ < w_.size() ? region_after(p1_) : w_.size();
  }

  // Short syllable ending at position `end` (exclusive).
  bool short_syllable_before(std::size_t end) const {
    if (end >= 3 && !is_vowel_wxy(w_[end - 1]) && is_vowel(w_[end - 2]) && !is_vowel(w_[end - 3])) {
      return true;
    }
    return end == 2 && !is_vowel(w_[1]) && is_vowel(w_[0]);
  }

  bool in_r1(std::size_t suffix_len) const { return w_.size() - suffix_len >= p1_; }
  bool in_r2(std::size_t suffix_len) const { return w_.size() - suffix_len >= p2_; }

  bool has_vowel(std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i < end; ++i) {
      if (is_vowel(w_[i])) return true;
    }
    return false;
  }

  void replace_suffix(std::size_t len, std::string_view with) {
    w_.resize(w_.size() - len);
    w_ += with;
  }

  // Longest suffix from `candidates` that the word ends with.
  template <typename Container>
  const auto* longest(const Container& candidates) const {
    const typename Container::value_type* best = nullptr;
    for (const auto& c : candidates) {
      std::string_view s = suffix_of(c);
      if (ends_with(w_, s) && (!best || s.size() > suffix_of(*best).size())) best = &c;
    }
    return best;
  }

  static std::string_view suffix_of(std::string_view s) { return s; }
  static std::string_view suffix_of(const Rule& r) { return r.suffix; }

  void step_1a() {
    static const std::array<std::string_view, 3> apostrophes{"'s'", "'s", "'"};
    if (const auto* a = longest(apostrophes)) w_.resize(w_.size() - a->size());

    static const std::array<std::string_view, 6> suffixes{"sses", "ied", "ies", "s", "us", "ss"};
    const auto* s = longest(suffixes);
    if (!s) return;
    if (*s == "sses") {
      replace_suffix(4, "ss");
    } else if (*s == "ied" || *s == "ies") {
      replace_suffix(3, w_.size() - 3 > 1 ? "i" : "ie");
    } else if (*s == "s") {
      // the letter immediately before the s does not count
      if (w_.size() >= 2 && has_vowel(0, w_.size() - 2)) w_.pop_back();
    }
  }

  void step_1b() {
    static const std::array<std::string_view, 6> suffixes{"eed", "eedly", "ed", "edly", "ing",
                                                          "ingly"};
    const auto* s = longest(suffixes);
    if (!s) return;
    if (*s == "eed" || *s == "eedly") {
      if (in_r1(s->size())) replace_suffix(s->size(), "ee");
      return;
    }
    const std::size_t stem_end = w_.size() - s->size();
    if (!has_vowel(0, stem_end)) return;
    w_.resize(stem_end);
    if (ends_with(w_, "at") || ends_with(w_, "bl") || ends_with(w_, "iz")) {
      w_ += 'e';
    } else if (w_.size() >= 2 && w_[w_.size() - 1] == w_[w_.size() - 2] &&
               std::string_view("bdfgmnprt").find(w_.back()) != std::string_view::npos) {
      w_.pop_back();
    } else if (w_.size() == p1_ && short_syllable_before(w_.size())) {
      w_ += 'e';
    }
  }

  void step_1c() {
    if (w_.size() < 3) return;
    char last = w_.back();
    if ((last == 'y' || last == 'Y') && !is_vowel(w_[w_.size() - 2])) w_.back() = 'i';
  }

  void step_2() {
    static const std::array<Rule, 24> rules{{
        {"tional", "tion"}, {"enci", "ence"},    {"anci", "ance"},    {"abli", "able"},
        {"entli", "ent"},   {"izer", "ize"},     {"ization", "ize"},  {"ational", "ate"},
        {"ation", "ate"},   {"ator", "ate"},     {"alism", "al"},     {"aliti", "al"},
        {"alli", "al"},     {"fulness", "ful"},  {"ousli", "ous"},    {"ousness", "ous"},
        {"iveness", "ive"}, {"iviti", "ive"},    {"biliti", "ble"},   {"bli", "ble"},
        {"ogi", "og"},      {"fulli", "ful"},    {"lessli", "less"},  {"li", ""},
    }};
    const Rule* r = longest(rules);
    if (!r || !in_r1(r->suffix.size())) return;
    const std::size_t before = w_.size() - r->suffix.size();
    if (r->suffix == "ogi") {
      if (before >= 1 && w_[before - 1] == 'l') replace_suffix(3, "og");
    } else if (r->suffix == "li") {
      if (before >= 1 && is_valid_li(w_[before - 1])) replace_suffix(2, "");
    } else {
      replace_suffix(r->suffix.size(), r->replacement);
    }
  }

  void step_3() {
    static const std::array<Rule, 9> rules{{
        {"tional", "tion"}, {"ational", "ate"}, {"alize", "al"}, {"icate", "ic"},
        {"iciti", "ic"},    {"ical", "ic"},     {"ful", ""},     {"ness", ""},
        {"ative", ""},
    }};
    const Rule* r = longest(rules);
    if (!r || !in_r1(r->suffix.size())) return;
    if (r->suffix == "ative") {
      if (in_r2(5)) replace_suffix(5, "");
      return;
    }
    replace_suffix(r->suffix.size(), r->replacement);
  }

  void step_4() {
    static const std::array<std::string_view, 18> suffixes{
        "al", "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
        "ment", "ent", "ism", "ate", "iti", "ous", "ive", "ize", "ion"};
    const auto* s = longest(suffixes);
    if (!s || !in_r2(s->size())) return;
    if (*s == "ion") {
      const std::size_t before = w_.size() - 3;
      if (before >= 1 && (w_[before - 1] == 's' || w_[before - 1] == 't')) w_.resize(before);
      return;
    }
    w_.resize(w_.size() - s->size());
  }

  void step_5() {
    if (w_.empty()) return;
    if (w_.back() == 'e') {
      if (in_r2(1) || (in_r1(1) && !short_syllable_before(w_.size() - 1))) w_.pop_back();
    } else if (w_.back() == 'l') {
      if (in_r2(1) && w_.size() >= 2 && w_[w_.size() - 2] == 'l') w_.pop_back();
    }
  }

  void postlude() {
    if (!y_found_) return;
    std::replace(w_.begin(), w_.end(), 'Y', 'y');
  }
};

}  // namespace

std::string stem(std::string_view word) { return Stemmer(std::string(word)).run(); }

}  // namespace infl::textprep
