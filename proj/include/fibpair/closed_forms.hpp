#pragma once

#include "fibpair/bigint.hpp"
#include "fibpair/solver.hpp"

namespace fibpair {

enum class Family { linear = 1, squared = 2, cubed = 3 };

inline unsigned long exponent(Family f) { return static_cast<unsigned long>(f); }

/// Explicit solution for the pair (F_n^i, F_{n+1}^i), i the family's exponent.
struct ClosedFormResult {
  Family family;
  FibIndex n;
  Gamma gamma;
  BigInt x;
  BigInt y;

  friend bool operator==(const ClosedFormResult&, const ClosedFormResult&) = default;
};

/// Six residue classes of n mod 6. Requires n >= 3.
ClosedFormResult closed_solution_linear(FibIndex n);

/// Case split on n mod 6 into the three squared formulas. Requires n >= 2.
ClosedFormResult closed_solution_squared(FibIndex n);

/// Odd n: x = sum (-1)^{k-1} F_k^3 over k <= n, y = sum F_k^3 over 2 <= k <= n-1.
/// Even n: x = sum (-1)^k F_k^3 over k <= n, minus 1; same y.
/// Requires n >= 3.
ClosedFormResult closed_solution_cubed(FibIndex n);

ClosedFormResult closed_solution(Family family, FibIndex n);

/// (x_n, y_n) = (F_n^3 - x_{n-1} - 1, y_{n-1} + F_{n-1}^3), gamma flipped.
ClosedFormResult cubed_recurrence_step(const ClosedFormResult& prev);

}  // namespace fibpair
