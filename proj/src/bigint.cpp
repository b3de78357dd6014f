#include "fibpair/bigint.hpp"

#include <charconv>

#include "fibpair/error.hpp"

namespace fibpair {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
    }
  }
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return BigInt(normalized, 10);
}

std::uint64_t parse_index(std::string_view text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("expected a nonnegative integer index, got '" + std::string(text) + "'");
  }
  return value;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

BigInt divide_exact(const BigInt& value, long divisor, std::string_view context) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(divisor))) {
    throw ContradictionError(std::string(context) + ": " + to_decimal(value) +
                             " is not divisible by " + std::to_string(divisor));
  }
  BigInt quotient;
  mpz_divexact_ui(quotient.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(divisor));
  return quotient;
}

}  // namespace fibpair
