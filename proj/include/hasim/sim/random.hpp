#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace hasim {

// Seeded random source. The raw engine (std::mt19937_64) is fully specified
// by the standard, and every derived draw below uses hand-rolled mappings
// instead of std distributions, so a given seed produces the same sequence on
// every platform and standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Uniform over the inclusive range [lo, hi].
  int range_int(int lo, int hi);

  // Uniform in [0, 1).
  double unit();

  double uniform(double lo, double hi);

  // Box-Muller; consumes exactly two draws.
  double normal(double mean, double stddev);

  // Lowercase alphanumeric identifier suffix.
  std::string suffix(std::size_t len);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace hasim
