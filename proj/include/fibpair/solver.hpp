#pragma once

#include <optional>
#include <vector>

#include "fibpair/bigint.hpp"

namespace fibpair {

/// Which equation of the pair is solvable: 1 for ax + by = T, 2 for ax + by + 1 = T.
enum class Gamma : int { one = 1, two = 2 };

inline int to_int(Gamma g) { return static_cast<int>(g); }
inline Gamma flip(Gamma g) { return g == Gamma::one ? Gamma::two : Gamma::one; }

/// Ordered pair (a, b) of positive, relatively prime integers, with the
/// target T = (a - 1)(b - 1) / 2. x multiplies a and y multiplies b.
class CoprimePair {
 public:
  /// Throws DomainError unless a, b >= 1 and gcd(a, b) = 1.
  CoprimePair(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& target() const { return target_; }

 private:
  BigInt a_;
  BigInt b_;
  BigInt target_;
};

struct Solution {
  BigInt x;
  BigInt y;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Unique nonnegative (x, y) with a x + b y + (gamma - 1) = T.
struct PairSolution {
  Gamma gamma;
  BigInt x;
  BigInt y;

  friend bool operator==(const PairSolution&, const PairSolution&) = default;
};

enum class PositiveEquation { plus, minus };

/// Unique positive (x, y) with a x + b y = k + 1 (plus) or k - 1 (minus),
/// where k = (a + 1) b / 2.
struct PositivePairSolution {
  PositiveEquation equation;
  BigInt x;
  BigInt y;
  BigInt k;

  friend bool operator==(const PositivePairSolution&, const PositivePairSolution&) = default;
};

struct ExtGcd {
  BigInt g;
  BigInt u;
  BigInt v;
};

/// g = gcd(a, b) and u a + v b = g. Requires a, b >= 1.
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

/// The nonnegative solution of a x + b y = t with 0 <= x < b (x = 0, y = t when
/// b = 1), or nullopt when that canonical representation has y < 0, in which case
/// no nonnegative solution exists at all.
std::optional<Solution> solve_target(const CoprimePair& pair, const BigInt& t);

/// Solves whichever of a x + b y = T, a x + b y + 1 = T has a nonnegative
/// solution. Throws ContradictionError if both or neither do.
PairSolution solve_pair(const CoprimePair& pair);

Gamma gamma(const CoprimePair& pair);

/// Dichotomy for the targets T + a + b and T + a + b - 1, solved in positive
/// integers. The unique solution is solve_pair's shifted by (1, 1). Read with
/// nonnegative solutions both targets can be representable, e.g. (3, 5):
/// 3*4 + 5*0 = 12 and 3*2 + 5*1 = 11.
PairSolution solve_shifted_pair(const CoprimePair& pair);

/// Residues behind the positive pair: a r1 + b s1 = k + 1 and a r2 + b s2 = k - 1
/// with r1, r2 in [1, b - 1].
struct PositivePairResidues {
  BigInt k;
  BigInt r1;
  BigInt s1;
  BigInt r2;
  BigInt s2;
};

/// Requires a odd, b >= 2, gcd(a, b) = 1; otherwise DomainError. Throws
/// ContradictionError unless r1 + r2 = b and s1 + s2 = 1.
PositivePairResidues positive_pair_residues(const BigInt& a, const BigInt& b);

/// Requires a odd, b >= 2, gcd(a, b) = 1; otherwise DomainError.
PositivePairSolution solve_positive_pair(const BigInt& a, const BigInt& b);

enum class Positivity { nonnegative, positive };

/// Exhaustive enumeration of a x + b y = t, sorted by x. Independent of the
/// residue method; refuses instances with a*b or the x-range above
/// kBruteForceLimit.
std::vector<Solution> brute_force_oracle(const BigInt& a, const BigInt& b, const BigInt& t,
                                         Positivity positivity);

inline constexpr long kBruteForceLimit = 100'000'000;

}  // namespace fibpair
