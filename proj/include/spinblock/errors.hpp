#pragma once

#include <stdexcept>
#include <string>

namespace spinblock {

// A domain precondition was violated: bad modulus, malformed partition,
// index out of range, not a core, inconsistent parities, ...
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A work or memory budget was exhausted before the computation finished.
// Callers get nothing rather than a silently truncated result.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace spinblock
