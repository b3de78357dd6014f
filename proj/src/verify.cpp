#include "fibpair/verify.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "fibpair/closed_forms.hpp"
#include "fibpair/error.hpp"
#include "fibpair/fibonacci.hpp"
#include "fibpair/solver.hpp"

namespace fibpair {

namespace {

class Tally {
 public:
  explicit Tally(std::string suite) { report_.suite = std::move(suite); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.checked;
    if (ok) {
      ++report_.passed;
    } else if (!report_.counterexample) {
      report_.counterexample = describe();
    }
  }

  // Runs `body`, recording a theorem-guard or domain exception as a failure.
  template <typename Body>
  void guarded(Body&& body, const std::function<std::string()>& where) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return where() + ": " + e.what(); });
    }
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

// F_0 .. F_last by the plain recurrence.
std::vector<BigInt> fib_table(FibIndex last) {
  std::vector<BigInt> f(last + 1);
  f[0] = 0;
  if (last >= 1) {
    f[1] = 1;
  }
  for (FibIndex k = 2; k <= last; ++k) {
    f[k] = f[k - 1] + f[k - 2];
  }
  return f;
}

BigInt cube(const BigInt& v) { return v * v * v; }

std::string at(const char* name, std::uint64_t value) {
  return std::string(name) + "=" + std::to_string(value);
}

std::string show(const PairSolution& s) {
  std::ostringstream out;
  out << "gamma=" << to_int(s.gamma) << " x=" << s.x << " y=" << s.y;
  return out.str();
}

bool same(const ClosedFormResult& c, const PairSolution& s) {
  return c.gamma == s.gamma && c.x == s.x && c.y == s.y;
}

}  // namespace

VerifyReport verify_cassini(FibIndex n_max) {
  Tally tally("cassini");
  for (FibIndex n = 1; n <= n_max; ++n) {
    const BigInt value = cassini(n);
    tally.check(value == (n % 2 == 0 ? 1 : -1),
                [&] { return at("n", n) + " cassini=" + to_decimal(value); });
  }
  return tally.take();
}

VerifyReport verify_parity(FibIndex n_max) {
  Tally tally("parity");
  BigInt cur = 0, next = 1;
  for (FibIndex n = 0; n <= n_max; ++n) {
    const bool even = mpz_even_p(cur.get_mpz_t()) != 0;
    tally.check(even == (n % 3 == 0) && even == (fib_parity(n) == Parity::even),
                [&] { return at("n", n) + (even ? " F_n even" : " F_n odd"); });
    cur += next;
    std::swap(cur, next);
  }
  return tally.take();
}

VerifyReport verify_triple(FibIndex n_max) {
  Tally tally("triple");
  for (FibIndex n = 1; n <= n_max; ++n) {
    auto [lhs, rhs] = fib_triple_identity(n);
    tally.check(lhs == rhs, [&] { return at("n", n); });
  }
  return tally.take();
}

VerifyReport verify_sums(FibIndex n_max) {
  Tally tally("sums");
  BigInt direct = 0, alternating = 0;
  BigInt cur = 1, prev = 0;  // F_n, F_{n-1}
  for (FibIndex n = 1; n <= n_max; ++n) {
    const BigInt c = cube(cur);
    direct += c;
    alternating += (n % 2 == 0) ? c : BigInt(-c);
    tally.guarded(
        [&] {
          tally.check(sum_cubes(n) == direct && alt_sum_cubes(n) == alternating,
                      [&] { return at("n", n); });
        },
        [&] { return at("n", n); });
    prev += cur;
    std::swap(prev, cur);
  }
  return tally.take();
}

VerifyReport verify_squared_identities(FibIndex n_max) {
  Tally tally("thm12");
  if (n_max < 2) {
    return tally.take();
  }
  const std::vector<BigInt> f = fib_table(n_max + 1);
  for (FibIndex n = 2; n <= n_max; ++n) {
    const BigInt p = f[n - 1] * f[n - 1];
    const BigInt c = f[n] * f[n];
    const BigInt q = f[n + 1] * f[n + 1];
    // Everything doubled so that no halving is needed.
    const BigInt rhs2 = (c - 1) * (q - 1);
    const BigInt y_gamma2 = c - p - 1;
    if (n % 2 == 1) {
      tally.check(2 + (c - 3) * c + y_gamma2 * q == rhs2,
                  [&] { return at("n", n) + " odd-n gamma=2 identity"; });
    } else {
      tally.check(2 + (c + 1) * c + y_gamma2 * q == rhs2,
                  [&] { return at("n", n) + " even-n gamma=2 identity"; });
    }
    tally.check((2 * c - p - 1) * c + (p - 1) * q == rhs2,
                [&] { return at("n", n) + " gamma=1 identity"; });
  }
  return tally.take();
}

VerifyReport verify_squared_solver(FibIndex n_max) {
  Tally tally("thm12-solver");
  for (FibIndex n = 2; n <= n_max; ++n) {
    tally.guarded(
        [&] {
          const ClosedFormResult closed = closed_solution_squared(n);
          const PairSolution solved = solve_pair(CoprimePair(fib_pow(n, 2), fib_pow(n + 1, 2)));
          tally.check(same(closed, solved), [&] { return at("n", n) + " solver " + show(solved); });
        },
        [&] { return at("n", n); });
  }
  return tally.take();
}

VerifyReport verify_cubed_identities(FibIndex m_max) {
  Tally tally("thm15");
  if (m_max < 2) {
    return tally.take();
  }
  const std::vector<BigInt> f = fib_table(2 * m_max + 1);
  // prefix[k] = sum_{i<=k} F_i^3, alt[k] = sum_{i<=k} (-1)^i F_i^3, by direct summation.
  std::vector<BigInt> prefix(f.size()), alt(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) {
    const BigInt c = cube(f[k]);
    prefix[k] = prefix[k - 1] + c;
    alt[k] = alt[k - 1] + (k % 2 == 0 ? c : BigInt(-c));
  }
  for (FibIndex m = 2; m <= m_max; ++m) {
    const BigInt a_odd = cube(f[2 * m - 1]);
    const BigInt a_even = cube(f[2 * m]);
    const BigInt b_odd = cube(f[2 * m + 1]);

    const BigInt x1 = -alt[2 * m - 1];
    const BigInt y1 = prefix[2 * m - 2] - 1;
    tally.check(2 * (x1 * a_odd + y1 * a_even) == (a_odd - 1) * (a_even - 1),
                [&] { return at("m", m) + " odd-index identity"; });

    const BigInt x2 = alt[2 * m] - 1;
    const BigInt y2 = prefix[2 * m - 1] - 1;
    tally.check(2 * (1 + x2 * a_even + y2 * b_odd) == (a_even - 1) * (b_odd - 1),
                [&] { return at("m", m) + " even-index identity"; });
  }
  return tally.take();
}

VerifyReport verify_cubed_solver(FibIndex n_max) {
  Tally tally("thm15-solver");
  if (n_max < 3) {
    return tally.take();
  }
  std::optional<ClosedFormResult> chain;
  for (FibIndex n = 3; n <= n_max; ++n) {
    tally.guarded(
        [&] {
          const ClosedFormResult closed = closed_solution_cubed(n);
          chain = chain ? cubed_recurrence_step(*chain) : closed;
          const PairSolution solved = solve_pair(CoprimePair(fib_pow(n, 3), fib_pow(n + 1, 3)));
          tally.check(same(closed, solved) && *chain == closed,
                      [&] { return at("n", n) + " solver " + show(solved); });
        },
        [&] { return at("n", n); });
  }
  return tally.take();
}

VerifyReport verify_dichotomy(unsigned long bound) {
  Tally tally("thm11");
  for (unsigned long a = 1; a <= bound; ++a) {
    for (unsigned long b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      auto where = [&] { return at("a", a) + " " + at("b", b); };
      tally.guarded(
          [&] {
            const BigInt t = BigInt((a - 1) * (b - 1) / 2);
            const auto on_t = brute_force_oracle(a, b, t, Positivity::nonnegative);
            const auto on_t1 = t >= 1 ? brute_force_oracle(a, b, t - 1, Positivity::nonnegative)
                                      : std::vector<Solution>{};
            const bool exclusive = on_t.empty() != on_t1.empty();
            const auto& hit = on_t.empty() ? on_t1 : on_t;
            const PairSolution solved = solve_pair(CoprimePair(a, b));
            const Gamma expected = on_t.empty() ? Gamma::two : Gamma::one;
            tally.check(exclusive && hit.size() == 1 && solved.gamma == expected &&
                            hit.front() == Solution{solved.x, solved.y},
                        [&] { return where() + " solver " + show(solved); });
          },
          where);
    }
  }
  return tally.take();
}

VerifyReport verify_shifted(unsigned long bound) {
  Tally tally("shifted");
  for (unsigned long a = 1; a <= bound; ++a) {
    for (unsigned long b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      auto where = [&] { return at("a", a) + " " + at("b", b); };
      tally.guarded(
          [&] {
            const CoprimePair pair(a, b);
            const PairSolution base = solve_pair(pair);
            const PairSolution shifted = solve_shifted_pair(pair);
            const BigInt t = pair.target() + a + b;
            const auto on_t = brute_force_oracle(a, b, t, Positivity::positive);
            const auto on_t1 = brute_force_oracle(a, b, t - 1, Positivity::positive);
            tally.check(shifted.gamma == base.gamma && shifted.x == base.x + 1 &&
                            shifted.y == base.y + 1 && on_t.size() + on_t1.size() == 1,
                        [&] { return where() + " shifted " + show(shifted); });
          },
          where);
    }
  }
  return tally.take();
}

VerifyReport verify_positive_pair(unsigned long a_max, unsigned long b_max) {
  Tally tally("thm42");
  for (unsigned long a = 1; a <= a_max; a += 2) {
    for (unsigned long b = 2; b <= b_max; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      auto where = [&] { return at("a", a) + " " + at("b", b); };
      tally.guarded(
          [&] {
            const PositivePairResidues res = positive_pair_residues(a, b);
            const PositivePairSolution sol = solve_positive_pair(a, b);
            const auto plus = brute_force_oracle(a, b, res.k + 1, Positivity::positive);
            const auto minus = brute_force_oracle(a, b, res.k - 1, Positivity::positive);
            const bool exclusive = plus.empty() != minus.empty();
            const auto& hit = plus.empty() ? minus : plus;
            const PositiveEquation tag =
                plus.empty() ? PositiveEquation::minus : PositiveEquation::plus;
            tally.check(exclusive && hit.size() == 1 && sol.equation == tag &&
                            hit.front() == Solution{sol.x, sol.y} && res.r1 + res.r2 == b &&
                            res.s1 + res.s2 == 1,
                        where);
          },
          where);
    }
  }
  return tally.take();
}

}  // namespace fibpair
