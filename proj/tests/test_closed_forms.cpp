#include "fibpair/closed_forms.hpp"

#include <gtest/gtest.h>

#include "fibpair/error.hpp"
#include "fibpair/fibonacci.hpp"

using namespace fibpair;

namespace {

PairSolution solver_for(Family family, FibIndex n) {
  const unsigned long i = exponent(family);
  return solve_pair(CoprimePair(fib_pow(n, i), fib_pow(n + 1, i)));
}

void expect_matches(const ClosedFormResult& r, int g, long x, long y) {
  EXPECT_EQ(to_int(r.gamma), g) << "n=" << r.n;
  EXPECT_EQ(r.x, x) << "n=" << r.n;
  EXPECT_EQ(r.y, y) << "n=" << r.n;
}

}  // namespace

TEST(Linear, Examples) {
  expect_matches(closed_solution_linear(6), 1, 2, 2);
  expect_matches(closed_solution_linear(3), 2, 0, 0);
  expect_matches(closed_solution_linear(9), 2, 10, 10);
  EXPECT_THROW(closed_solution_linear(2), DomainError);
}

TEST(Linear, MatchesSolver) {
  for (FibIndex n = 3; n <= 200; ++n) {
    const ClosedFormResult r = closed_solution_linear(n);
    const PairSolution s = solver_for(Family::linear, n);
    ASSERT_EQ(r.gamma, s.gamma) << "n=" << n;
    ASSERT_EQ(r.x, s.x) << "n=" << n;
    ASSERT_EQ(r.y, s.y) << "n=" << n;
  }
}

TEST(Squared, Examples) {
  expect_matches(closed_solution_squared(5), 1, 20, 4);
  expect_matches(closed_solution_squared(7), 2, 83, 52);
  expect_matches(closed_solution_squared(4), 2, 5, 2);
  expect_matches(closed_solution_squared(13), 2, 27143, 16776);
  expect_matches(closed_solution_squared(2), 1, 0, 0);
  EXPECT_THROW(closed_solution_squared(1), DomainError);
}

TEST(Squared, MatchesSolver) {
  for (FibIndex n = 2; n <= 200; ++n) {
    const ClosedFormResult r = closed_solution_squared(n);
    const PairSolution s = solver_for(Family::squared, n);
    ASSERT_EQ(r.gamma, s.gamma) << "n=" << n;
    ASSERT_EQ(r.x, s.x) << "n=" << n;
    ASSERT_EQ(r.y, s.y) << "n=" << n;
  }
}

TEST(Squared, GammaTwoExactlyWhenNIsOneModThree) {
  for (FibIndex n = 2; n <= 97; ++n) {
    EXPECT_EQ(closed_solution_squared(n).gamma == Gamma::two, n % 3 == 1) << "n=" << n;
  }
}

TEST(Cubed, Examples) {
  expect_matches(closed_solution_cubed(5), 1, 106, 36);
  expect_matches(closed_solution_cubed(6), 2, 405, 161);
  expect_matches(closed_solution_cubed(8), 2, 7469, 2870);
  expect_matches(closed_solution_cubed(3), 1, 8, 1);
  EXPECT_THROW(closed_solution_cubed(2), DomainError);
}

TEST(Cubed, MatchesSolver) {
  for (FibIndex n = 3; n <= 200; ++n) {
    const ClosedFormResult r = closed_solution_cubed(n);
    const PairSolution s = solver_for(Family::cubed, n);
    ASSERT_EQ(r.gamma, s.gamma) << "n=" << n;
    ASSERT_EQ(r.x, s.x) << "n=" << n;
    ASSERT_EQ(r.y, s.y) << "n=" << n;
    ASSERT_EQ(r.gamma, n % 2 == 1 ? Gamma::one : Gamma::two);
  }
}

TEST(CubedRecurrence, Examples) {
  expect_matches(cubed_recurrence_step({Family::cubed, 3, Gamma::one, 8, 1}), 2, 18, 9);
  expect_matches(cubed_recurrence_step({Family::cubed, 5, Gamma::one, 106, 36}), 2, 405, 161);
  expect_matches(cubed_recurrence_step({Family::cubed, 7, Gamma::one, 1791, 673}), 2, 7469, 2870);
}

TEST(CubedRecurrence, ChainAgreesWithClosedForm) {
  ClosedFormResult r = closed_solution_cubed(3);
  for (FibIndex n = 4; n <= 200; ++n) {
    r = cubed_recurrence_step(r);
    ASSERT_EQ(r, closed_solution_cubed(n));
  }
}

TEST(CubedRecurrence, RejectsWrongInput) {
  EXPECT_THROW(cubed_recurrence_step(closed_solution_squared(5)), DomainError);
  EXPECT_THROW(cubed_recurrence_step({Family::cubed, 2, Gamma::one, 0, 0}), DomainError);
}

TEST(ClosedSolution, Dispatch) {
  EXPECT_EQ(closed_solution(Family::squared, 9), closed_solution_squared(9));
  EXPECT_EQ(closed_solution(Family::cubed, 9), closed_solution_cubed(9));
  EXPECT_EQ(closed_solution(Family::linear, 9), closed_solution_linear(9));
}
