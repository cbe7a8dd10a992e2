#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace benders {

// Error taxonomy shared by all modules.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidRay : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StaleBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IterationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NodeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TimeLimitReached : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyPool : std::logic_error {
  using std::logic_error::logic_error;
};
struct EmptyArchive : std::logic_error {
  using std::logic_error::logic_error;
};
struct ThresholdViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct SizeLimit : std::length_error {
  using std::length_error::length_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Deterministic RNG used everywhere randomness is needed. We avoid the
// std distributions because their output is implementation-defined; runs
// must be replayable bit-exactly from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Lemire multiply-shift; bias is < 2^-64 and irrelevant here.
  uint64_t uniform_int(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Independent per-replication seed stream.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  SplitMix64 mix(master ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  return mix.next();
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace benders
