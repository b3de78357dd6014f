#pragma once

#include <stdexcept>
#include <string>

namespace fibpair {

/// Bad input: non-coprime pairs, indices below a formula's domain, malformed numbers.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A theorem-backed guard fired. Seeing this means either a bug or a counterexample.
class ContradictionError : public std::logic_error {
 public:
  explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fibpair
