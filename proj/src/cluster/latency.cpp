#include "hasim/cluster/latency.hpp"

#include <algorithm>

namespace hasim {

double LatencySpec::sample(RandomSource& rng) const {
  switch (kind) {
    case Kind::constant:
      return a;
    case Kind::uniform:
      return rng.uniform(a, b);
    case Kind::normal:
      return std::max(0.0, rng.normal(a, b));
  }
  return a;
}

}  // namespace hasim
