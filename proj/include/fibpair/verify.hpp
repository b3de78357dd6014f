#pragma once

#include <optional>
#include <string>

#include "fibpair/bigint.hpp"

namespace fibpair {

/// Outcome of an identity sweep; `counterexample` describes the first failure.
struct VerifyReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return checked == passed && !counterexample; }
};

/// Cassini: F_{n-1} F_{n+1} - F_n^2 = (-1)^n for n in [1, n_max].
VerifyReport verify_cassini(FibIndex n_max);
/// F_n even iff 3 | n, n in [0, n_max], against the values themselves.
VerifyReport verify_parity(FibIndex n_max);
/// F_{3n} = 5 F_n^3 + 3 (-1)^n F_n for n in [1, n_max].
VerifyReport verify_triple(FibIndex n_max);
/// Closed-form cube sums against running direct sums, n in [1, n_max].
VerifyReport verify_sums(FibIndex n_max);

/// The three squared-case identities as polynomial statements in F_{n-1},
/// F_n, F_{n+1}, n in [2, n_max].
VerifyReport verify_squared_identities(FibIndex n_max);
/// closed_solution_squared(n) == solve_pair(F_n^2, F_{n+1}^2), n in [2, n_max].
VerifyReport verify_squared_solver(FibIndex n_max);

/// The two cubed-case identities with directly summed coefficients, m in [2, m_max].
VerifyReport verify_cubed_identities(FibIndex m_max);
/// closed_solution_cubed(n) == solve_pair, and the recurrence chain from n = 3
/// agrees with both, for n in [3, n_max].
VerifyReport verify_cubed_solver(FibIndex n_max);

/// Exclusive dichotomy over coprime 1 <= a, b <= bound, against the brute-force oracle.
VerifyReport verify_dichotomy(unsigned long bound);
/// Shifted pair equals solve_pair + (1, 1), coprime 1 <= a, b <= bound.
VerifyReport verify_shifted(unsigned long bound);
/// Positive pair over odd a <= a_max and coprime b in [2, b_max], against the oracle.
VerifyReport verify_positive_pair(unsigned long a_max, unsigned long b_max);

}  // namespace fibpair
