#pragma once

#include <cstdint>
#include <map>

namespace pathsum::walks {

/// Histogram from sampled walks: end-position counts plus, for every
/// position, the number of sampled walks that visited it at least once.
struct SimHistogram {
  long steps = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<long, std::uint64_t> end_counts;
  std::map<long, std::uint64_t> touch_counts;

  friend bool operator==(const SimHistogram&, const SimHistogram&) = default;
};

/// Uniform i.i.d. steps from std::mt19937_64 seeded with `seed`; one draw per
/// step, least significant bit set means a left step (+1).
SimHistogram simulate_walks(long steps, std::uint64_t samples, std::uint64_t seed);

}  // namespace pathsum::walks
