#pragma once

#include <utility>

#include "fibpair/bigint.hpp"

namespace fibpair {

enum class Parity { even, odd };

/// F_n by fast doubling, O(log n) multiplications.
BigInt fib(FibIndex n);

/// (F_n, F_{n+1}) in one fast-doubling pass.
std::pair<BigInt, BigInt> fib_pair(FibIndex n);

/// F_n^k, k >= 1.
BigInt fib_pow(FibIndex n, unsigned long k);

/// Even exactly when n is a multiple of 3.
Parity fib_parity(FibIndex n);

/// F_{n-1} F_{n+1} - F_n^2, which is (-1)^n. Requires n >= 1.
BigInt cassini(FibIndex n);

/// (F_{3n}, 5 F_n^3 + 3 (-1)^n F_n). Requires n >= 1.
std::pair<BigInt, BigInt> fib_triple_identity(FibIndex n);

/// sum_{k=1..n} F_k^3 from the closed form in F_{3n+3}, F_{3n}, F_{n+1}, F_n.
/// Requires n >= 1.
BigInt sum_cubes(FibIndex n);

/// sum_{k=1..n} (-1)^k F_k^3 from its closed form. Requires n >= 1.
BigInt alt_sum_cubes(FibIndex n);

}  // namespace fibpair
