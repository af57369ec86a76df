#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfs {

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps these onto its exit codes, so library code
// should throw the most specific kind that applies.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or size disagreement between tensors.
struct DimensionError : Error {
  using Error::Error;
};

/// Invalid or inconsistent configuration values.
struct ConfigError : Error {
  using Error::Error;
};

/// A required prerequisite artifact (checkpoint, dataset, ...) is missing.
struct DependencyError : Error {
  using Error::Error;
};

/// Training diverged (NaN/Inf loss) or another numeric abort condition.
struct NumericError : Error {
  using Error::Error;
};

/// API misuse (e.g. backward on a non-scalar, reusing a consumed tape).
struct UsageError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic seed mixing. splitmix64 is the avalanche primitive; mix_seed
// folds an arbitrary number of 64-bit fields into one stream seed. Pure
// integer arithmetic, so results are identical on every platform.
// ---------------------------------------------------------------------------

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t s) { return splitmix64(s); }

template <class... Rest>
constexpr std::uint64_t mix_seed(std::uint64_t s, std::uint64_t next, Rest... rest) {
  return mix_seed(splitmix64(s ^ splitmix64(next)), rest...);
}

// Stream tags keep unrelated consumers of the same user seed decorrelated.
namespace seed_tag {
constexpr std::uint64_t kScene = 0x5343454E45ULL;      // dataset generation
constexpr std::uint64_t kInit = 0x494E4954ULL;         // parameter init
constexpr std::uint64_t kShuffle = 0x53485546ULL;      // epoch shuffling
constexpr std::uint64_t kMix = 0x4D4958ULL;            // corruption mix draws
constexpr std::uint64_t kPretrain = 0x505245ULL;       // host pretraining
}  // namespace seed_tag

// ---------------------------------------------------------------------------
// Rng: mt19937_64 plus distribution helpers implemented from raw draws,
// avoiding the implementation-defined std:: distributions.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Standard normal via Box-Muller (second draw cached).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Fisher-Yates, fixed algorithm regardless of standard library.
  template <class Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// ---------------------------------------------------------------------------
// FNV-1a 64-bit hash for content fingerprints (checkpoints, eval manifests).
// ---------------------------------------------------------------------------

constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

template <class T>
std::uint64_t fnv1a64_values(const std::vector<T>& v, std::uint64_t h = kFnvOffset) {
  return v.empty() ? h : fnv1a64(v.data(), v.size() * sizeof(T), h);
}

inline std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

}  // namespace pfs
