#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fas {

// Error taxonomy. The CLI maps these onto exit codes: everything derived
// from ValidationError exits with 2, UndefinedMetricError with 3.
class FasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public FasError {
 public:
  using FasError::FasError;
};

// Malformed input file content (always names the offending line).
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SplitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ProtocolError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ScoringError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GenerationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A metric whose denominator is empty is undefined, never silently zero.
class UndefinedMetricError : public FasError {
 public:
  using FasError::FasError;
};

}  // namespace fas

namespace fas::rnd {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random helpers on top of std::mt19937_64. The engine itself
// is fully specified by the standard; the std::*_distribution adaptors are
// not, so every artifact-producing draw goes through these helpers to keep
// outputs byte-identical for a fixed seed across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 bits of entropy.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive, rejection-sampled to stay unbiased.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<int64_t>(draw % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Symmetric uniform, handy for weight init.
  double uniform_sym(double a) { return uniform(-a, a); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent substream keyed by a label. Derived from the original seed,
  // so fork order and parent draws do not perturb the child stream.
  Rng fork(uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream ^ 0x51ed2701abcdef12ULL)));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace fas::rnd
