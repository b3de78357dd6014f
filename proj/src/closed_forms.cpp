#include "fibpair/closed_forms.hpp"

#include "fibpair/error.hpp"
#include "fibpair/fibonacci.hpp"

namespace fibpair {

namespace {

void require_at_least(FibIndex n, FibIndex lo, const char* op) {
  if (n < lo) {
    throw DomainError(std::string(op) + " requires n >= " + std::to_string(lo) + ", got " +
                      std::to_string(n));
  }
}

BigInt half(const BigInt& value) { return divide_exact(value, 2, "closed form halving"); }

}  // namespace

ClosedFormResult closed_solution_linear(FibIndex n) {
  require_at_least(n, 3, "closed_solution_linear");
  // Writing n = 6k + r, the six identities read off (x, y) from
  // (F_n - 1)/2, (F_{n-1} - 1)/2 and (F_{n-2} - 1)/2.
  auto [fn2, fn1] = fib_pair(n - 2);
  switch (n % 6) {
    case 0:
    case 2:
      return {Family::linear, n, Gamma::one, half(fn1 - 1), half(fn1 - 1)};
    case 1:
      return {Family::linear, n, Gamma::one, half(fn1 + fn2 - 1), half(fn2 - 1)};
    case 3:
    case 5:
      return {Family::linear, n, Gamma::two, half(fn1 - 1), half(fn1 - 1)};
    default:
      return {Family::linear, n, Gamma::two, half(fn1 + fn2 - 1), half(fn2 - 1)};
  }
}

ClosedFormResult closed_solution_squared(FibIndex n) {
  require_at_least(n, 2, "closed_solution_squared");
  auto [prev, cur] = fib_pair(n - 1);
  const BigInt p2 = prev * prev;  // F_{n-1}^2
  const BigInt c2 = cur * cur;    // F_n^2
  switch (n % 6) {
    case 1:
      return {Family::squared, n, Gamma::two, half(c2 - 3), half(c2 - p2 - 1)};
    case 4:
      return {Family::squared, n, Gamma::two, half(c2 + 1), half(c2 - p2 - 1)};
    default:
      return {Family::squared, n, Gamma::one, c2 - half(p2 + 1), half(p2 - 1)};
  }
}

ClosedFormResult closed_solution_cubed(FibIndex n) {
  require_at_least(n, 3, "closed_solution_cubed");
  // sum_{k=2}^{n-1} F_k^3 drops the F_1^3 = 1 term.
  BigInt y = sum_cubes(n - 1) - 1;
  if (n % 2 == 1) {
    return {Family::cubed, n, Gamma::one, -alt_sum_cubes(n), std::move(y)};
  }
  return {Family::cubed, n, Gamma::two, alt_sum_cubes(n) - 1, std::move(y)};
}

ClosedFormResult closed_solution(Family family, FibIndex n) {
  switch (family) {
    case Family::linear:
      return closed_solution_linear(n);
    case Family::squared:
      return closed_solution_squared(n);
    case Family::cubed:
      return closed_solution_cubed(n);
  }
  throw DomainError("unknown family");
}

ClosedFormResult cubed_recurrence_step(const ClosedFormResult& prev) {
  if (prev.family != Family::cubed || prev.n < 3) {
    throw DomainError("cubed_recurrence_step requires a cubed result with n >= 3");
  }
  const FibIndex n = prev.n + 1;
  auto [f_prev, f_cur] = fib_pair(n - 1);
  return {Family::cubed, n, flip(prev.gamma), pow(f_cur, 3) - prev.x - 1,
          prev.y + pow(f_prev, 3)};
}

}  // namespace fibpair
