#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibpair {

/// Exact signed integer. Quantities documented as nonnegative (a, b, x, y, T)
/// never go below zero; signed results (Cassini, alternating sums,
/// cross-differences) use the same type.
using BigInt = mpz_class;

/// Index into the Fibonacci sequence.
using FibIndex = std::uint64_t;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal integer of any length. Throws DomainError.
BigInt parse_decimal(std::string_view text);

/// Parses a nonnegative decimal that fits in 64 bits. Throws DomainError.
std::uint64_t parse_index(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Exact division; throws ContradictionError when `divisor` does not divide `value`.
BigInt divide_exact(const BigInt& value, long divisor, std::string_view context);

}  // namespace fibpair
