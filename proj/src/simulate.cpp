#include "pathsum/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pathsum::walks {

SimHistogram simulate_walks(long steps, std::uint64_t samples, std::uint64_t seed) {
  if (steps < 0) throw std::domain_error("simulate_walks: negative step count");
  if (samples < 1) throw std::domain_error("simulate_walks: need at least one sample");
  SimHistogram h{steps, samples, seed, {}, {}};
  std::mt19937_64 gen(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    long pos = 0, mn = 0, mx = 0;
    for (long i = 0; i < steps; ++i) {
      pos += (gen() & 1ull) ? 1 : -1;
      mn = std::min(mn, pos);
      mx = std::max(mx, pos);
    }
    ++h.end_counts[pos];
    for (long p = mn; p <= mx; ++p) ++h.touch_counts[p];
  }
  return h;
}

}  // namespace pathsum::walks
