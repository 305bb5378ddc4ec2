#include "pathsum/oracle.hpp"
#include "pathsum/simulate.hpp"
#include "pathsum/walks.hpp"

#include "doctest.h"

#include <vector>

using namespace pathsum;
using namespace pathsum::walks;

namespace {

BigInt brute(long steps, std::vector<PathConstraint> cons) {
  return oracle_count(steps, cons, OracleBackend::exhaustive);
}

}  // namespace

TEST_CASE("count_paths pinned values, cross-checked against enumeration") {
  CHECK(count_paths(8, 2) == 56);
  CHECK(brute(8, {PathConstraint::end_at(2)}) == 56);
  CHECK(count_paths(0, 0) == 1);
  CHECK(count_paths(3, 1) == 3);
  CHECK(brute(3, {PathConstraint::end_at(1)}) == 3);
  CHECK(count_paths(3, 0) == 0);
  CHECK(count_paths(-1, 1) == 0);
  CHECK(count_paths(4, 6) == 0);
}

TEST_CASE("count_paths satisfies the one-step recurrence") {
  for (long N = 0; N <= 30; ++N)
    for (long m = -(N + 1); m <= N + 1; ++m)
      CHECK(count_paths(N + 1, m) == count_paths(N, m - 1) + count_paths(N, m + 1));
}

TEST_CASE("count_touching pinned values and extremes") {
  CHECK(count_touching(12, 2, 4) == 220);
  CHECK(brute(12, {PathConstraint::end_at(2), PathConstraint::touches(4)}) == 220);
  CHECK(count_touching(4, 2, 1) == 4);
  CHECK(count_touching(2, 0, 1) == 1);
  CHECK(brute(2, {PathConstraint::end_at(0), PathConstraint::touches(1)}) == 1);
  // extreme positions admit exactly one walk
  CHECK(count_touching(8, 2, 5) == 1);
  CHECK(count_touching(8, 2, -3) == 1);
  CHECK(count_touching(8, 2, 6) == 0);
  CHECK_THROWS_AS(count_touching(4, -2, 1), std::domain_error);
}

TEST_CASE("count_touching equals the mirror count outside the span") {
  for (long N = 0; N <= 12; ++N)
    for (long m = N % 2; m <= N; m += 2)
      for (long r = -N; r <= N; ++r) {
        if (r <= 0 || r >= m) CHECK(count_touching(N, m, r) == count_paths(N, 2 * r - m));
      }
}

TEST_CASE("count_avoiding pinned values") {
  CHECK(count_avoiding(4, 0, -1) == 2);
  CHECK(count_avoiding(3, 1, -1) == 2);
  CHECK(count_avoiding(2, 0, -3) == 2);
  CHECK(count_avoiding(2, 0, -3) == count_paths(2, 0));
  CHECK_THROWS_AS(count_avoiding(4, 0, 1), std::domain_error);
  CHECK_THROWS_AS(count_avoiding(4, -2, -1), std::domain_error);
}

TEST_CASE("count_avoiding_any covers negative end positions") {
  CHECK(count_avoiding_any(2, -2, -3) == 1);
  CHECK(count_avoiding_any(2, -2, -2) == 0);
  CHECK(count_avoiding_any(2, -4, -3) == 0);
  CHECK(count_avoiding_any(-1, -1, -1) == 0);
  for (long N = 0; N <= 10; ++N)
    for (long m = -N; m <= N; ++m)
      for (long r = -N - 1; r <= -1; ++r) {
        std::vector<PathConstraint> cons{PathConstraint::end_at(m), PathConstraint::avoids(r)};
        CHECK(count_avoiding_any(N, m, r) == brute(N, cons));
      }
}

TEST_CASE("closed_form_T pinned values and oracle agreement") {
  CHECK(closed_form_T(4, 0, 1) == Rational(2));
  CHECK(closed_form_T(4, 0, 2) == Rational(5));
  CHECK(closed_form_T(4, 0, 3) == Rational(6));
  CHECK(closed_form_T(4, 0, 4) == Rational(6));
  CHECK_THROWS_AS(closed_form_T(3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(closed_form_T(4, -2, 1), std::domain_error);
  CHECK_THROWS_AS(closed_form_T(4, 0, 5), std::invalid_argument);

  for (long N = 0; N <= 20; ++N)
    for (long m = N % 2; m <= N; m += 2)
      for (int d = 1; d <= 4; ++d)
        CHECK(closed_form_T(N, m, d) == Rational(count_avoiding(N, m, -d)));
}

TEST_CASE("avoiding counts at the origin are the ballot-style numbers") {
  // closed_form_T(2n, 0, 1) runs through 1, 1, 2, 5, 14, 42, ...
  Rational expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (long n = 0; n <= 6; ++n) {
    CHECK(closed_form_T(2 * n, 0, 1) == expected[n]);
    CHECK(closed_form_T(2 * n, 0, 1) ==
          Rational(BigInt(count_paths(2 * n, 0)), BigInt(n + 1)));
  }
}

TEST_CASE("first_passage_count pinned values") {
  CHECK(first_passage_count(4, 2, 1, 0) == 3);
  CHECK(first_passage_count(4, 2, 1, 1) == 1);
  CHECK(first_passage_count(4, 2, 1, 2) == 0);
  CHECK(first_passage_count(4, 2, 1, -1) == 0);
  CHECK_THROWS_AS(first_passage_count(4, 2, 0, 0), std::domain_error);
}

TEST_CASE("first_passage_count matches the first-visit oracle") {
  for (long N = 0; N <= 10; ++N)
    for (long m = -N; m <= N; ++m)
      for (long r = 1; r <= N; ++r)
        for (long k = 0; 2 * k <= N; ++k) {
          std::vector<PathConstraint> cons{PathConstraint::end_at(m),
                                           PathConstraint::first_reaches(r, r + 2 * k)};
          CHECK(first_passage_count(N, m, r, k) == brute(N, cons));
        }
}

TEST_CASE("recursion check on the pinned points and a grid") {
  CheckReport rep = check_recursion(4, 0, -1);
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(5));

  rep = check_recursion(2, 0, 1);
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(3));

  rep = check_recursion(0, 0, 0);
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(1));

  CHECK_THROWS_AS(check_recursion(4, -1, 0), std::domain_error);

  for (long N = 0; N <= 12; ++N)
    for (long m = 0; m <= N; ++m)
      for (long r = -N; r <= N; ++r) CHECK(check_recursion(N, m, r).status == Status::equal);
}

TEST_CASE("decomposition spot values") {
  CheckReport rep = check_decomposition(DecompId::cross_up, {4, 0, 1});
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(6));

  rep = check_decomposition(DecompId::band, {4, 0, -1});
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(3));

  rep = check_decomposition(DecompId::first_to_three, {5, 3, std::nullopt});
  CHECK(rep.status == Status::equal);
  CHECK(exact::as_rational(*rep.lhs) == Rational(4));

  // side-condition violations skip with a reason
  rep = check_decomposition(DecompId::first_to_two, {4, 0, std::nullopt});
  CHECK(rep.status == Status::skipped);
  CHECK(!rep.note.empty());
  rep = check_decomposition(DecompId::dyck_midpoint, {4, std::nullopt, 3});
  CHECK(rep.status == Status::skipped);
  rep = check_decomposition(DecompId::cross_up, {4, 0, 2});
  CHECK(rep.status == Status::skipped);
  CHECK_THROWS_AS(check_decomposition(DecompId::cross_up, {4, std::nullopt, 1}),
                  std::invalid_argument);
}

TEST_CASE("every decomposition verifies on its small grid") {
  for (DecompId id : kAllDecomps) {
    auto reports = sweep_decomposition(id, 10);
    CHECK(!reports.empty());
    for (const auto& rep : reports) {
      CAPTURE(rep.id);
      CAPTURE(rep.n);
      CHECK(rep.status == Status::equal);
    }
  }
}

TEST_CASE("decomposition names round-trip") {
  for (DecompId id : kAllDecomps) CHECK(parse_decomp(decomp_name(id)) == id);
  CHECK(!parse_decomp("nope"));
}

TEST_CASE("simulate is reproducible and conserves mass") {
  auto h1 = simulate_walks(4, 20000, 9);
  auto h2 = simulate_walks(4, 20000, 9);
  CHECK(h1 == h2);
  std::uint64_t total = 0;
  for (const auto& [pos, c] : h1.end_counts) {
    total += c;
    CHECK((pos + 4) % 2 == 0);
  }
  CHECK(total == 20000);
  CHECK(h1.touch_counts.at(0) == 20000);

  auto h3 = simulate_walks(4, 20000, 10);
  CHECK(h1 != h3);

  auto h4 = simulate_walks(1, 100, 7);
  for (const auto& [pos, c] : h4.end_counts) CHECK((pos == 1 || pos == -1));

  CHECK_THROWS_AS(simulate_walks(2, 0, 1), std::domain_error);
}

TEST_CASE("sampled frequency of the origin return sits in the exact band") {
  const std::uint64_t samples = 1'000'000;
  auto h = simulate_walks(4, samples, 1);
  Rational p(BigInt(6), BigInt(16));
  Rational freq(BigInt(h.end_counts.at(0)), BigInt(samples));
  Rational diff = freq - p;
  Rational band = Rational(25) * p * (Rational(1) - p) / Rational(BigInt(samples));
  CHECK(diff * diff <= band);
}
