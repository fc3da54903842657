#pragma once

#include <string>
#include <string_view>

namespace infl::textprep {

// English Snowball (Porter2) stemmer. Input is expected to be a lowercase
// word; characters outside a-z (other than apostrophes) are treated as
// consonants, so non-ASCII input is processed byte-wise without failing.
[[nodiscard]] std::string stem(std::string_view word);

}  // namespace infl::textprep
