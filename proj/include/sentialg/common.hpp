#pragma once

// Small utilities shared by every module: UTF-8 handling, text file reading,
// exact numeric formatting, seeded randomness and a bounded parallel loop.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sentialg {

namespace utf8 {

// Decodes UTF-8; invalid bytes decode to U+FFFD one byte at a time.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);
std::size_t length(std::string_view text);

bool is_arabic(char32_t cp);
bool is_arabic_letter(char32_t cp);
bool is_latin_letter(char32_t cp);
bool is_space(char32_t cp);
bool contains_arabic(std::string_view text);

}  // namespace utf8

std::string trim(std::string_view text);
std::string ascii_lower(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep,
                 std::size_t begin = 0, std::size_t end = static_cast<std::size_t>(-1));

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);
bool parse_double(std::string_view text, double& out);
bool parse_int(std::string_view text, long long& out);

std::vector<std::string> read_lines(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// FNV-1a, used for corpus fingerprints and derived seeds.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 14695981039346656037ULL);
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

// Seeded generator. The engine is the standard Mersenne twister; the
// distributions are written out here so sequences are identical across
// standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::size_t index(std::size_t n);
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Each index is visited
// exactly once; callers write results into preallocated slots.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace sentialg
