#include "hasim/sim/random.hpp"

#include <cmath>
#include <stdexcept>

namespace hasim {

std::uint64_t RandomSource::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RandomSource::below: n must be positive");
  // Rejection sampling over the largest multiple of n to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

int RandomSource::range_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("RandomSource::range_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<int>(lo + static_cast<std::int64_t>(below(span)));
}

double RandomSource::unit() {
  // 53 high-quality bits -> [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
  return lo + (hi - lo) * unit();
}

double RandomSource::normal(double mean, double stddev) {
  // u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - unit();
  const double u2 = unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(2.0 * M_PI * u2);
}

std::string RandomSource::suffix(std::size_t len) {
  static const char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(kAlphabet[below(sizeof(kAlphabet) - 1)]);
  }
  return out;
}

}  // namespace hasim
