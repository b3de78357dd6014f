#include "fibpair/fibonacci.hpp"

#include <bit>

#include "fibpair/error.hpp"

namespace fibpair {

namespace {

void require_positive(FibIndex n, const char* op) {
  if (n < 1) {
    throw DomainError(std::string(op) + " requires n >= 1");
  }
}

inline BigInt sign_power(FibIndex n) { return (n % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

std::pair<BigInt, BigInt> fib_pair(FibIndex n) {
  // Walk the bits of n from the top:
  //   F_{2k}   = F_k (2 F_{k+1} - F_k)
  //   F_{2k+1} = F_k^2 + F_{k+1}^2
  BigInt f = 0;  // F_k
  BigInt g = 1;  // F_{k+1}
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    BigInt even = f * (2 * g - f);
    BigInt odd = f * f + g * g;
    if ((n >> bit) & 1U) {
      f = odd;
      g = even + odd;
    } else {
      f = std::move(even);
      g = std::move(odd);
    }
  }
  return {std::move(f), std::move(g)};
}

BigInt fib(FibIndex n) { return fib_pair(n).first; }

BigInt fib_pow(FibIndex n, unsigned long k) {
  if (k < 1) {
    throw DomainError("fib_pow requires k >= 1");
  }
  return pow(fib(n), k);
}

Parity fib_parity(FibIndex n) { return n % 3 == 0 ? Parity::even : Parity::odd; }

BigInt cassini(FibIndex n) {
  require_positive(n, "cassini");
  auto [prev, cur] = fib_pair(n - 1);
  BigInt next = prev + cur;
  return prev * next - cur * cur;
}

std::pair<BigInt, BigInt> fib_triple_identity(FibIndex n) {
  require_positive(n, "fib_triple_identity");
  BigInt fn = fib(n);
  return {fib(3 * n), 5 * fn * fn * fn + 3 * sign_power(n) * fn};
}

BigInt sum_cubes(FibIndex n) {
  require_positive(n, "sum_cubes");
  auto [f3n, f3n1] = fib_pair(3 * n);
  BigInt f3n3 = f3n1 + (f3n1 + f3n);  // F_{3n+3} = F_{3n+1} + F_{3n+2}
  auto [fn, fn1] = fib_pair(n);
  BigInt quarter = divide_exact(f3n3 + f3n + 2, 4, "sum_cubes closed form");
  return quarter - fn1 * fn1 * fn1 - fn * fn * fn;
}

BigInt alt_sum_cubes(FibIndex n) {
  require_positive(n, "alt_sum_cubes");
  auto [f3n, f3n1] = fib_pair(3 * n);
  BigInt f3n3 = f3n1 + (f3n1 + f3n);
  auto [fn, fn1] = fib_pair(n);
  const BigInt s = sign_power(n);  // (-1)^n; (-1)^{n+1} = -s
  BigInt quarter = divide_exact(s * f3n3 - s * f3n + 2, 4, "alt_sum_cubes closed form");
  return quarter - s * fn1 * fn1 * fn1 + s * fn * fn * fn;
}

}  // namespace fibpair
