#pragma once

#include "pathsum/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace pathsum::walks {

using exact::BigInt;

/// One conjunctive condition on a walk. Positions are sampled after every
/// step, including the start (step 0 at position 0).
struct PathConstraint {
  enum class Kind { end_at, touches, avoids, first_reaches };
  Kind kind;
  long position = 0;
  long step = -1;  // first_reaches only

  static PathConstraint end_at(long m) { return {Kind::end_at, m}; }
  static PathConstraint touches(long r) { return {Kind::touches, r}; }
  static PathConstraint avoids(long r) { return {Kind::avoids, r}; }
  static PathConstraint first_reaches(long r, long at_step) { return {Kind::first_reaches, r, at_step}; }
};

enum class OracleBackend { exhaustive, dp };

/// Number of `steps`-step walks satisfying every constraint. The exhaustive
/// backend walks all 2^steps sequences and refuses steps > 24; the DP backend
/// runs over the (step, position) lattice and is valid for any length.
BigInt oracle_count(long steps, std::span<const PathConstraint> constraints, OracleBackend backend);
BigInt oracle_count(long steps, std::span<const PathConstraint> constraints);

/// Satisfying walks in lexicographic order (L < R), truncated at `limit`.
std::vector<std::string> enumerate_paths(long steps, std::span<const PathConstraint> constraints,
                                         std::size_t limit);

}  // namespace pathsum::walks
