#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infl {

// ---- strings -------------------------------------------------------------

[[nodiscard]] std::string ascii_lower(std::string_view s);
[[nodiscard]] std::string_view trim(std::string_view s);
[[nodiscard]] std::vector<std::string> split(std::string_view s, char sep);
[[nodiscard]] bool is_word_byte(unsigned char c);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Locale-independent numeric parsing; the whole field must be consumed.
[[nodiscard]] std::optional<double> parse_double(std::string_view s);
[[nodiscard]] std::optional<long long> parse_int(std::string_view s);

// Shortest representation that reads back to the same double.
[[nodiscard]] std::string format_double(double v);
[[nodiscard]] std::string format_fixed(double v, int decimals);

// ---- UTF-8 ---------------------------------------------------------------

struct DecodedChar {
  char32_t cp;
  std::size_t len;  // bytes consumed; 1 for an invalid byte
  bool valid;
};

[[nodiscard]] DecodedChar decode_utf8(std::string_view s, std::size_t pos);
void append_utf8(std::string& out, char32_t cp);

// ---- statistics ----------------------------------------------------------

[[nodiscard]] double mean(std::span<const double> xs);
// Sample standard deviation (n-1 denominator); nullopt when n < 2.
[[nodiscard]] std::optional<double> sample_std(std::span<const double> xs);

// ---- random numbers ------------------------------------------------------

// Deterministic across platforms: only the raw mt19937_64 stream is used,
// never the implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound);
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace infl
