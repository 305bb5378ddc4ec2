#include "pathsum/walks.hpp"

#include "pathsum/binomial.hpp"

#include <stdexcept>
#include <string>

namespace pathsum::walks {

using exact::int_binomial;

bool realizable(long steps, long end) {
  if (steps < 0) return false;
  if ((steps + end) % 2 != 0) return false;
  return end >= -steps && end <= steps;
}

long left_steps(long steps, long end) { return (steps + end) / 2; }

BigInt count_paths(long steps, long end) {
  if (!realizable(steps, end)) return 0;
  return int_binomial(steps, left_steps(steps, end));
}

BigInt reflected_count(long steps, long end, long barrier) {
  if (steps < 0 || (steps + end) % 2 != 0) return 0;
  return int_binomial(steps, left_steps(steps, end) - barrier);
}

BigInt count_touching(long steps, long end, long barrier) {
  if (end < 0) throw std::domain_error("count_touching: end position must be nonnegative");
  if (!realizable(steps, end)) return 0;
  if (barrier >= 0 && barrier <= end) return count_paths(steps, end);
  return reflected_count(steps, end, barrier);
}

BigInt count_avoiding(long steps, long end, long barrier) {
  if (end < 0) throw std::domain_error("count_avoiding: end position must be nonnegative");
  if (barrier >= 0) throw std::domain_error("count_avoiding: barrier must be negative");
  return count_paths(steps, end) - count_touching(steps, end, barrier);
}

BigInt count_avoiding_any(long steps, long end, long barrier) {
  if (barrier >= 0) throw std::domain_error("count_avoiding_any: barrier must be negative");
  if (end <= barrier) return 0;
  return count_paths(steps, end) - reflected_count(steps, end, barrier);
}

Rational closed_form_T(long steps, long end, int depth) {
  if (depth < 1 || depth > 4) throw std::invalid_argument("closed_form_T: depth must be 1..4");
  if (end < 0) throw std::domain_error("closed_form_T: end position must be nonnegative");
  if (!realizable(steps, end)) throw std::domain_error("closed_form_T: unrealizable walk");
  const Rational total(count_paths(steps, end));
  const Rational m(end), N(steps);
  const Rational mu(left_steps(steps, end));
  switch (depth) {
    case 1:
      return (m + 1) / (mu + 1) * total;
    case 2:
      return (m + 2) * (N + 1) / ((mu + 1) * (mu + 2)) * total;
    case 3:
      return (m + 3) * ((m + 1) * (m + 5) + Rational(3) * (N + 1) * (N + 1)) /
             (Rational(4) * (mu + 1) * (mu + 2) * (mu + 3)) * total;
    default:
      return (m + 4) * (N + 1) * ((m + 2) * (m + 6) + N * (N + 2)) /
             (Rational(2) * (mu + 1) * (mu + 2) * (mu + 3) * (mu + 4)) * total;
  }
}

BigInt first_passage_count(long steps, long end, long target, long k) {
  if (target < 1) throw std::domain_error("first_passage_count: target must be >= 1");
  if (k < 0) return 0;
  return count_avoiding_any(target + 2 * k - 1, target - 1, -1) *
         count_paths(steps - target - 2 * k, end - target);
}

namespace {

CheckReport make_report(std::string id, long steps, std::optional<long> end, std::optional<long> r) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.n = steps;
  if (end) rep.m = Rational(*end);
  if (r) rep.r = Rational(*r);
  return rep;
}

void finish(CheckReport& rep, BigInt lhs, BigInt rhs) {
  rep.lhs = exact::LimitValue(Rational(std::move(lhs)));
  rep.rhs = exact::LimitValue(Rational(std::move(rhs)));
  rep.status = exact::as_rational(*rep.lhs) == exact::as_rational(*rep.rhs) ? Status::equal : Status::unequal;
}

void skip(CheckReport& rep, std::string why) {
  rep.status = Status::skipped;
  rep.note = std::move(why);
}

BigInt pow2(long k) { return BigInt(1) << k; }

}  // namespace

CheckReport check_recursion(long steps, long end, long barrier) {
  if (end < 0) throw std::domain_error("check_recursion: end position must be nonnegative");
  CheckReport rep = make_report("recursion", steps, end, barrier);
  BigInt lhs = reflected_count(steps + 1, end + 1, barrier);
  BigInt rhs = reflected_count(steps, end, barrier) + reflected_count(steps, end + 2, barrier);
  finish(rep, std::move(lhs), std::move(rhs));
  return rep;
}

std::string_view decomp_name(DecompId id) {
  switch (id) {
    case DecompId::cross_up: return "cross-up";
    case DecompId::cross_down: return "cross-down";
    case DecompId::first_passage: return "first-passage";
    case DecompId::last_passage: return "last-passage";
    case DecompId::band: return "band";
    case DecompId::dyck_midpoint: return "dyck-midpoint";
    case DecompId::dyck_cross: return "dyck-cross";
    case DecompId::first_to_two: return "first-to-two";
    case DecompId::first_to_three: return "first-to-three";
  }
  return "?";
}

std::optional<DecompId> parse_decomp(std::string_view name) {
  for (DecompId id : kAllDecomps)
    if (decomp_name(id) == name) return id;
  return std::nullopt;
}

namespace {

long require(const std::optional<long>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("decomposition parameter missing: ") + what);
  return *v;
}

CheckReport check_cross_up(long N, long m, long r) {
  CheckReport rep = make_report("cross-up", N, m, r);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  long mu = left_steps(N, m);
  if (r < 0 || r > mu - 1) {
    skip(rep, "diagonal index out of range 0..left_steps-1");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2; ++k)
    sum += count_paths(r + k, r - k) * count_paths(N - r - k - 1, m - r + k - 1);
  finish(rep, count_paths(N, m), std::move(sum));
  return rep;
}

CheckReport check_cross_down(long N, long m, long r) {
  CheckReport rep = make_report("cross-down", N, m, r);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  if (r < 0 || r > (N - m) / 2 - 1) {
    skip(rep, "diagonal index out of range 0..right_steps-1");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N + m) / 2; ++k)
    sum += count_paths(r + k, -r + k) * count_paths(N - r - k - 1, m + r - k + 1);
  finish(rep, count_paths(N, m), std::move(sum));
  return rep;
}

CheckReport check_first_passage(long N, long m, long r) {
  CheckReport rep = make_report("first-passage", N, m, r);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  if (r < 1 || r > m) {
    skip(rep, "target must satisfy 1 <= r <= end");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2; ++k) sum += first_passage_count(N, m, r, k);
  finish(rep, count_paths(N, m), std::move(sum));
  return rep;
}

CheckReport check_last_passage(long N, long m, long r) {
  CheckReport rep = make_report("last-passage", N, m, r);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  if (r < 0 || r > m - 1) {
    skip(rep, "target must satisfy 0 <= r <= end-1");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2; ++k)
    sum += count_paths(r + 2 * k, r) * count_avoiding_any(N - r - 2 * k - 1, m - r - 1, -1);
  finish(rep, count_paths(N, m), std::move(sum));
  return rep;
}

CheckReport check_band(long N, long m, long r) {
  CheckReport rep = make_report("band", N, m, r);
  if (m < 0 || !realizable(N, m)) {
    skip(rep, "end must be nonnegative and realizable");
    return rep;
  }
  if (r > -1) {
    skip(rep, "barrier must be negative");
    return rep;
  }
  BigInt lhs = count_touching(N, m, r) - count_touching(N, m, r - 1);
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2 + r; ++k)
    sum += count_avoiding_any(2 * k - r - 1, -r - 1, -1) * count_avoiding_any(N - 2 * k + r, m - r, -1);
  finish(rep, std::move(lhs), std::move(sum));
  return rep;
}

CheckReport check_dyck_midpoint(long N, long r) {
  CheckReport rep = make_report("dyck-midpoint", N, 0, r);
  if (N < 0 || N % 2 != 0) {
    skip(rep, "step count must be even");
    return rep;
  }
  if (r < 0 || r % 2 != 0 || r > N) {
    skip(rep, "split step must be even and within 0..steps");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= r / 2; ++k)
    sum += count_avoiding_any(r, 2 * k, -1) * count_avoiding_any(N - r, 2 * k, -1);
  finish(rep, count_avoiding_any(N, 0, -1), std::move(sum));
  return rep;
}

CheckReport check_dyck_cross(long N, long r) {
  CheckReport rep = make_report("dyck-cross", N, 0, r);
  if (N < 0 || N % 2 != 0) {
    skip(rep, "step count must be even");
    return rep;
  }
  if (r < 0 || r > N / 2 - 1) {
    skip(rep, "diagonal index out of range 0..steps/2-1");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= r; ++k)
    sum += count_avoiding_any(r + k, r - k, -1) * count_avoiding_any(N - r - k - 1, r - k + 1, -1);
  finish(rep, count_avoiding_any(N, 0, -1), std::move(sum));
  return rep;
}

CheckReport check_first_to_two(long N, long m) {
  CheckReport rep = make_report("first-to-two", N, m, std::nullopt);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  if (m < 2) {
    skip(rep, "end must be >= 2 so every walk visits position 2");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2; ++k) sum += count_avoiding_any(N - 2 * k - 2, m - 2, -3);
  finish(rep, count_avoiding_any(N, m, -1), std::move(sum));
  return rep;
}

CheckReport check_first_to_three(long N, long m) {
  CheckReport rep = make_report("first-to-three", N, m, std::nullopt);
  if (!realizable(N, m)) {
    skip(rep, "unrealizable walk");
    return rep;
  }
  if (m < 3) {
    skip(rep, "end must be >= 3 so every walk visits position 3");
    return rep;
  }
  BigInt sum = 0;
  for (long k = 0; k <= (N - m) / 2; ++k)
    sum += pow2(k) * count_avoiding_any(N - 2 * k - 3, m - 3, -4);
  finish(rep, count_avoiding_any(N, m, -1), std::move(sum));
  return rep;
}

}  // namespace

CheckReport check_decomposition(DecompId id, const DecompParams& p) {
  switch (id) {
    case DecompId::cross_up:
      return check_cross_up(p.steps, require(p.end, "end"), require(p.r, "r"));
    case DecompId::cross_down:
      return check_cross_down(p.steps, require(p.end, "end"), require(p.r, "r"));
    case DecompId::first_passage:
      return check_first_passage(p.steps, require(p.end, "end"), require(p.r, "r"));
    case DecompId::last_passage:
      return check_last_passage(p.steps, require(p.end, "end"), require(p.r, "r"));
    case DecompId::band:
      return check_band(p.steps, require(p.end, "end"), require(p.r, "r"));
    case DecompId::dyck_midpoint:
      return check_dyck_midpoint(p.steps, require(p.r, "r"));
    case DecompId::dyck_cross:
      return check_dyck_cross(p.steps, require(p.r, "r"));
    case DecompId::first_to_two:
      return check_first_to_two(p.steps, require(p.end, "end"));
    case DecompId::first_to_three:
      return check_first_to_three(p.steps, require(p.end, "end"));
  }
  throw std::invalid_argument("check_decomposition: unknown id");
}

std::vector<CheckReport> sweep_decomposition(DecompId id, long steps_max) {
  std::vector<CheckReport> out;
  auto add = [&](const DecompParams& p) { out.push_back(check_decomposition(id, p)); };
  for (long N = 0; N <= steps_max; ++N) {
    switch (id) {
      case DecompId::cross_up:
        for (long m = -N; m <= N; m += 2)
          for (long r = 0; r <= left_steps(N, m) - 1; ++r) add({N, m, r});
        break;
      case DecompId::cross_down:
        for (long m = -N; m <= N; m += 2)
          for (long r = 0; r <= (N - m) / 2 - 1; ++r) add({N, m, r});
        break;
      case DecompId::first_passage:
        for (long m = N % 2 == 0 ? 2 : 1; m <= N; m += 2)
          for (long r = 1; r <= m; ++r) add({N, m, r});
        break;
      case DecompId::last_passage:
        for (long m = N % 2 == 0 ? 2 : 1; m <= N; m += 2)
          for (long r = 0; r <= m - 1; ++r) add({N, m, r});
        break;
      case DecompId::band:
        for (long m = N % 2; m <= N; m += 2)
          for (long r = -N; r <= -1; ++r) add({N, m, r});
        break;
      case DecompId::dyck_midpoint:
        if (N % 2 == 0)
          for (long r = 0; r <= N; r += 2) add({N, std::nullopt, r});
        break;
      case DecompId::dyck_cross:
        if (N % 2 == 0)
          for (long r = 0; r <= N / 2 - 1; ++r) add({N, std::nullopt, r});
        break;
      case DecompId::first_to_two:
        for (long m = N % 2 == 0 ? 2 : 3; m <= N; m += 2) add({N, m, std::nullopt});
        break;
      case DecompId::first_to_three:
        for (long m = N % 2 == 0 ? 4 : 3; m <= N; m += 2) add({N, m, std::nullopt});
        break;
    }
  }
  return out;
}

}  // namespace pathsum::walks
