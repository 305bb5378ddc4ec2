#include "pathsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathsum::walks {

namespace {

constexpr long kExhaustiveLimit = 24;

struct FirstVisitTracker {
  long target;
  long required_step;
  long seen_at = -1;
};

bool path_satisfies(std::span<const PathConstraint> constraints, long final_pos, long min_pos,
                    long max_pos, std::span<const FirstVisitTracker> visits) {
  std::size_t visit_idx = 0;
  for (const auto& c : constraints) {
    switch (c.kind) {
      case PathConstraint::Kind::end_at:
        if (final_pos != c.position) return false;
        break;
      case PathConstraint::Kind::touches:
        if (c.position < min_pos || c.position > max_pos) return false;
        break;
      case PathConstraint::Kind::avoids:
        if (c.position >= min_pos && c.position <= max_pos) return false;
        break;
      case PathConstraint::Kind::first_reaches:
        if (visits[visit_idx++].seen_at != c.step) return false;
        break;
    }
  }
  return true;
}

std::vector<FirstVisitTracker> make_trackers(std::span<const PathConstraint> constraints) {
  std::vector<FirstVisitTracker> v;
  for (const auto& c : constraints)
    if (c.kind == PathConstraint::Kind::first_reaches) v.push_back({c.position, c.step, c.position == 0 ? 0 : -1});
  return v;
}

BigInt exhaustive_count(long steps, std::span<const PathConstraint> constraints) {
  if (steps > kExhaustiveLimit)
    throw std::domain_error("oracle_count: exhaustive backend refuses steps > 24");
  if (steps < 0) return 0;
  const auto base_trackers = make_trackers(constraints);
  BigInt count = 0;
  const unsigned long total = 1ul << steps;
  for (unsigned long mask = 0; mask < total; ++mask) {
    long pos = 0, mn = 0, mx = 0;
    auto visits = base_trackers;
    for (long i = 0; i < steps; ++i) {
      bool right = (mask >> (steps - 1 - i)) & 1ul;
      pos += right ? -1 : 1;
      mn = std::min(mn, pos);
      mx = std::max(mx, pos);
      for (auto& t : visits)
        if (t.seen_at < 0 && pos == t.target) t.seen_at = i + 1;
    }
    if (path_satisfies(constraints, pos, mn, mx, visits)) ++count;
  }
  return count;
}

BigInt dp_count(long steps, std::span<const PathConstraint> constraints) {
  if (steps < 0) return 0;
  for (const auto& c : constraints)
    if (c.kind == PathConstraint::Kind::first_reaches && (c.step < 0 || c.step > steps)) return 0;
  std::vector<long> touch_targets;
  for (const auto& c : constraints)
    if (c.kind == PathConstraint::Kind::touches) touch_targets.push_back(c.position);
  const std::size_t n_touch = touch_targets.size();
  if (n_touch > 16) throw std::invalid_argument("oracle_count: too many touch constraints");
  const std::size_t n_masks = std::size_t{1} << n_touch;
  const long width = 2 * steps + 1;  // positions -steps..steps

  auto forbidden = [&](long pos, long step) {
    for (const auto& c : constraints) {
      if (c.kind == PathConstraint::Kind::avoids && pos == c.position) return true;
      if (c.kind == PathConstraint::Kind::first_reaches && pos == c.position && step < c.step) return true;
    }
    return false;
  };
  auto touch_bits = [&](long pos) {
    std::size_t bits = 0;
    for (std::size_t t = 0; t < n_touch; ++t)
      if (touch_targets[t] == pos) bits |= std::size_t{1} << t;
    return bits;
  };
  auto required_at = [&](long step, long pos) {
    for (const auto& c : constraints)
      if (c.kind == PathConstraint::Kind::first_reaches && c.step == step && pos != c.position) return false;
    return true;
  };

  std::vector<BigInt> layer(static_cast<std::size_t>(width) * n_masks, BigInt(0));
  auto at = [&](std::vector<BigInt>& l, long pos, std::size_t mask) -> BigInt& {
    return l[static_cast<std::size_t>(pos + steps) * n_masks + mask];
  };

  if (forbidden(0, 0) || !required_at(0, 0)) return 0;
  at(layer, 0, touch_bits(0)) = 1;

  for (long step = 1; step <= steps; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(width) * n_masks, BigInt(0));
    for (long pos = -(step - 1); pos <= step - 1; ++pos) {
      for (std::size_t mask = 0; mask < n_masks; ++mask) {
        BigInt& src = at(layer, pos, mask);
        if (src == 0) continue;
        for (long dir : {+1, -1}) {
          long npos = pos + dir;
          if (forbidden(npos, step) || !required_at(step, npos)) continue;
          at(next, npos, mask | touch_bits(npos)) += src;
        }
      }
    }
    layer = std::move(next);
  }

  const std::size_t full = n_masks - 1;
  BigInt count = 0;
  for (long pos = -steps; pos <= steps; ++pos) {
    bool ends_ok = true;
    for (const auto& c : constraints)
      if (c.kind == PathConstraint::Kind::end_at && pos != c.position) ends_ok = false;
    if (ends_ok) count += at(layer, pos, full);
  }
  return count;
}

}  // namespace

BigInt oracle_count(long steps, std::span<const PathConstraint> constraints, OracleBackend backend) {
  return backend == OracleBackend::exhaustive ? exhaustive_count(steps, constraints)
                                              : dp_count(steps, constraints);
}

BigInt oracle_count(long steps, std::span<const PathConstraint> constraints) {
  return dp_count(steps, constraints);
}

std::vector<std::string> enumerate_paths(long steps, std::span<const PathConstraint> constraints,
                                         std::size_t limit) {
  if (steps > kExhaustiveLimit) throw std::domain_error("enumerate_paths: steps > 24");
  if (steps < 0) return {};
  std::vector<std::string> out;
  std::string path(static_cast<std::size_t>(steps), 'L');
  const auto base_trackers = make_trackers(constraints);

  // Depth-first over L before R yields lexicographic order.
  auto rec = [&](auto&& self, long depth, long pos) -> bool {
    if (out.size() >= limit) return false;
    if (depth == steps) {
      long p = 0, mn = 0, mx = 0;
      auto visits = base_trackers;
      for (long i = 0; i < steps; ++i) {
        p += path[static_cast<std::size_t>(i)] == 'L' ? 1 : -1;
        mn = std::min(mn, p);
        mx = std::max(mx, p);
        for (auto& t : visits)
          if (t.seen_at < 0 && p == t.target) t.seen_at = i + 1;
      }
      if (path_satisfies(constraints, p, mn, mx, visits)) out.push_back(path);
      return out.size() < limit;
    }
    for (char c : {'L', 'R'}) {
      path[static_cast<std::size_t>(depth)] = c;
      if (!self(self, depth + 1, pos + (c == 'L' ? 1 : -1))) return false;
    }
    return true;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace pathsum::walks
