#include "fibpair/solver.hpp"

#include "fibpair/error.hpp"

namespace fibpair {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Least nonnegative residue.
BigInt mod(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// a^{-1} mod b for b >= 2.
BigInt inverse_mod(const BigInt& a, const BigInt& b) {
  ExtGcd e = ext_gcd(a, b);
  return mod(e.u, b);
}

std::string describe(const BigInt& a, const BigInt& b) {
  return "(" + to_decimal(a) + ", " + to_decimal(b) + ")";
}

// Positive analogue of solve_target: x in [1, b], y >= 1.
std::optional<Solution> solve_target_positive(const CoprimePair& pair, const BigInt& t) {
  const BigInt& a = pair.a();
  const BigInt& b = pair.b();
  BigInt x = b == 1 ? BigInt(1) : mod(mod(t, b) * inverse_mod(a, b), b);
  if (x == 0) {
    x = b;
  }
  BigInt rest = t - a * x;
  if (rest < b) {
    return std::nullopt;
  }
  BigInt y;
  mpz_divexact(y.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
  return Solution{std::move(x), std::move(y)};
}

// Shared dichotomy: exactly one of `high`, `high - 1` is representable.
PairSolution solve_dichotomy(const CoprimePair& pair, const BigInt& high, Positivity mode,
                             const char* what) {
  auto solve = [&](const BigInt& t) {
    return mode == Positivity::positive ? solve_target_positive(pair, t) : solve_target(pair, t);
  };
  std::optional<Solution> first = solve(high);
  std::optional<Solution> second;
  if (high >= 1) {
    second = solve(high - 1);
  }
  if (first.has_value() == second.has_value()) {
    throw ContradictionError(std::string(what) + " for " + describe(pair.a(), pair.b()) +
                             (first ? ": both equations are solvable"
                                    : ": neither equation is solvable"));
  }
  if (first) {
    return {Gamma::one, std::move(first->x), std::move(first->y)};
  }
  return {Gamma::two, std::move(second->x), std::move(second->y)};
}

}  // namespace

CoprimePair::CoprimePair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1 || b_ < 1) {
    throw DomainError("pair " + describe(a_, b_) + " must be positive");
  }
  if (gcd(a_, b_) != 1) {
    throw DomainError("pair " + describe(a_, b_) + " is not coprime");
  }
  target_ = divide_exact((a_ - 1) * (b_ - 1), 2, "target (a-1)(b-1)/2");
}

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) {
    throw DomainError("ext_gcd requires positive arguments");
  }
  BigInt old_r = a, r = b;
  BigInt old_u = 1, u = 0;
  BigInt old_v = 0, v = 1;
  while (r != 0) {
    BigInt q = old_r / r;  // both positive, truncation is floor
    BigInt next = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next);
    next = old_u - q * u;
    old_u = std::move(u);
    u = std::move(next);
    next = old_v - q * v;
    old_v = std::move(v);
    v = std::move(next);
  }
  return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

std::optional<Solution> solve_target(const CoprimePair& pair, const BigInt& t) {
  if (t < 0) {
    throw DomainError("solve_target requires t >= 0");
  }
  const BigInt& a = pair.a();
  const BigInt& b = pair.b();
  if (b == 1) {
    return Solution{0, t};
  }
  // Any other x with a x = t (mod b) is larger by a multiple of b, which only
  // lowers y, so y < 0 here rules out every nonnegative solution.
  BigInt x = mod(mod(t, b) * inverse_mod(a, b), b);
  BigInt rest = t - a * x;
  if (rest < 0) {
    return std::nullopt;
  }
  BigInt y;
  mpz_divexact(y.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
  return Solution{std::move(x), std::move(y)};
}

PairSolution solve_pair(const CoprimePair& pair) {
  return solve_dichotomy(pair, pair.target(), Positivity::nonnegative, "solve_pair");
}

Gamma gamma(const CoprimePair& pair) { return solve_pair(pair).gamma; }

PairSolution solve_shifted_pair(const CoprimePair& pair) {
  return solve_dichotomy(pair, pair.target() + pair.a() + pair.b(), Positivity::positive,
                         "solve_shifted_pair");
}

PositivePairResidues positive_pair_residues(const BigInt& a, const BigInt& b) {
  if (a < 1 || mpz_even_p(a.get_mpz_t())) {
    throw DomainError("positive pair requires a positive odd a, got " + to_decimal(a));
  }
  if (b < 2) {
    throw DomainError("positive pair requires b >= 2, got " + to_decimal(b));
  }
  if (gcd(a, b) != 1) {
    throw DomainError("pair " + describe(a, b) + " is not coprime");
  }
  BigInt k = divide_exact((a + 1) * b, 2, "k = (a+1)b/2");
  if (mod(k, b) != 0) {
    throw ContradictionError("k is not a multiple of b for " + describe(a, b));
  }

  // k = 0 (mod b), so a r = k +- 1 (mod b) reduces to r = +-a^{-1} (mod b).
  const BigInt inv = inverse_mod(a, b);
  BigInt r1 = mod((k + 1) * inv, b);
  BigInt r2 = mod((k - 1) * inv, b);
  if (r1 < 1 || r2 < 1) {
    throw ContradictionError("zero residue in positive pair for " + describe(a, b));
  }
  BigInt s1 = k + 1 - a * r1;
  BigInt s2 = k - 1 - a * r2;
  if (mod(s1, b) != 0 || mod(s2, b) != 0) {
    throw ContradictionError("residue does not solve its congruence for " + describe(a, b));
  }
  mpz_divexact(s1.get_mpz_t(), s1.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(s2.get_mpz_t(), s2.get_mpz_t(), b.get_mpz_t());
  if (r1 + r2 != b || s1 + s2 != 1) {
    throw ContradictionError("r1 + r2 = b or s1 + s2 = 1 failed for " + describe(a, b));
  }
  return {std::move(k), std::move(r1), std::move(s1), std::move(r2), std::move(s2)};
}

PositivePairSolution solve_positive_pair(const BigInt& a, const BigInt& b) {
  PositivePairResidues res = positive_pair_residues(a, b);
  // s1 + s2 = 1, so exactly one of them is positive.
  if (res.s1 > 0) {
    return {PositiveEquation::plus, std::move(res.r1), std::move(res.s1), std::move(res.k)};
  }
  return {PositiveEquation::minus, std::move(res.r2), std::move(res.s2), std::move(res.k)};
}

std::vector<Solution> brute_force_oracle(const BigInt& a, const BigInt& b, const BigInt& t,
                                         Positivity positivity) {
  if (a < 1 || b < 1 || t < 0) {
    throw DomainError("brute_force_oracle requires a, b >= 1 and t >= 0");
  }
  if (a * b > kBruteForceLimit || t / a > kBruteForceLimit) {
    throw DomainError("brute_force_oracle refuses instances beyond test scale");
  }
  const long av = a.get_si();
  const long bv = b.get_si();
  const long tv = t.get_si();
  const long first_x = positivity == Positivity::positive ? 1 : 0;
  const long min_y = positivity == Positivity::positive ? 1 : 0;

  std::vector<Solution> found;
  for (long x = first_x; av * x <= tv; ++x) {
    const long rest = tv - av * x;
    if (rest % bv == 0 && rest / bv >= min_y) {
      found.push_back({x, rest / bv});
    }
  }
  return found;
}

}  // namespace fibpair
