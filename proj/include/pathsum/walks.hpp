#pragma once

#include "pathsum/rational.hpp"
#include "pathsum/report.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pathsum::walks {

using exact::BigInt;
using exact::Rational;

/// A walk of `steps` steps from 0 ending at `end` exists iff steps+end is
/// even and |end| <= steps.
bool realizable(long steps, long end);

/// Number of left steps (steps+end)/2 of a realizable walk.
long left_steps(long steps, long end);

/// Walks of `steps` steps from 0 to `end`; 0 when no such walk exists.
BigInt count_paths(long steps, long end);

/// The mirror value count_paths(steps, 2*barrier - end), i.e. the walk count
/// with the tail after the last barrier visit flipped across the barrier.
BigInt reflected_count(long steps, long end, long barrier);

/// Walks from 0 to end >= 0 that touch `barrier` at least once. Resolves to
/// count_paths for 0 <= barrier <= end and to the mirror count otherwise.
BigInt count_touching(long steps, long end, long barrier);

/// Walks from 0 to end >= 0 that never touch the negative `barrier`.
BigInt count_avoiding(long steps, long end, long barrier);

/// Barrier-avoiding count for arbitrary end position (ends at or beyond the
/// barrier give 0). Decomposition sums need this for inner walks with
/// negative ends.
BigInt count_avoiding_any(long steps, long end, long barrier);

/// Product-form count of walks avoiding barrier -depth, depth in 1..4.
/// Equals count_avoiding(steps, end, -depth) on realizable walks.
Rational closed_form_T(long steps, long end, int depth);

/// Walks of `steps` steps to `end` whose first visit to target >= 1 happens
/// at step target + 2k.
BigInt first_passage_count(long steps, long end, long target, long k);

/// One-step recursion of the mirror counts:
/// mirror(steps+1, end+1, barrier) = mirror(steps, end, barrier) + mirror(steps, end+2, barrier).
CheckReport check_recursion(long steps, long end, long barrier);

enum class DecompId {
  cross_up,       // split at the unique upward crossing of a fixed diagonal
  cross_down,     // split at the unique downward crossing
  first_passage,  // split at the first visit to a positive target
  last_passage,   // split at the last visit to a target below the end
  band,           // touching r but not r-1, split at the first visit to r
  dyck_midpoint,  // nonnegative loops split by their position at a fixed step
  dyck_cross,     // nonnegative loops split at an upward diagonal crossing
  first_to_two,   // barrier -1 walks split at the first visit to 2
  first_to_three, // barrier -1 walks split at the first visit to 3
};

inline constexpr DecompId kAllDecomps[] = {
    DecompId::cross_up,      DecompId::cross_down, DecompId::first_passage,
    DecompId::last_passage,  DecompId::band,       DecompId::dyck_midpoint,
    DecompId::dyck_cross,    DecompId::first_to_two, DecompId::first_to_three,
};

std::string_view decomp_name(DecompId id);
std::optional<DecompId> parse_decomp(std::string_view name);

struct DecompParams {
  long steps = 0;
  std::optional<long> end;
  std::optional<long> r;
};

/// Evaluates both sides of the chosen decomposition exactly. Out-of-range
/// parameters produce a skipped report with the reason in `note`.
CheckReport check_decomposition(DecompId id, const DecompParams& params);

/// All valid parameter points of the decomposition with steps <= steps_max.
std::vector<CheckReport> sweep_decomposition(DecompId id, long steps_max);

}  // namespace pathsum::walks
